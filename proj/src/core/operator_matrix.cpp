#include "operator_matrix.hpp"

#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

namespace fockproj {

namespace {

constexpr double kRoot2 = 1.4142135623730951;

void check_mode(const SpacePtr& space, int mode) {
    require(mode >= 0 && mode < space->modes(), errc::mode_out_of_range,
            "mode " + std::to_string(mode) + " out of range for " +
                std::to_string(space->modes()) + " modes");
}

}  // namespace

OperatorMatrix::OperatorMatrix(SpacePtr space, Matrix entries) : space_(std::move(space)), m_(std::move(entries)) {
    require(space_ != nullptr, errc::invalid_argument, "operator requires a space");
    require(m_.rows() == space_->dimension() && m_.cols() == space_->dimension(),
            errc::dimension_mismatch, "entries do not match the space dimension");
}

OperatorMatrix OperatorMatrix::zero(SpacePtr space) {
    Index d = space->dimension();
    return OperatorMatrix(std::move(space), Matrix::Zero(d, d));
}

OperatorMatrix OperatorMatrix::identity(SpacePtr space) {
    Index d = space->dimension();
    OperatorMatrix op(std::move(space), Matrix::Identity(d, d));
    op.hermitian_ = true;
    op.unitary_ = true;
    return op;
}

OperatorMatrix OperatorMatrix::annihilation(SpacePtr space, int mode) {
    check_mode(space, mode);
    Index d = space->dimension();
    Matrix m = Matrix::Zero(d, d);
    std::vector<int> occ;
    for (Index i = 0; i < d; ++i) {
        occ = space->occupations(i);
        int n = occ[static_cast<std::size_t>(mode)];
        if (n == 0) continue;
        occ[static_cast<std::size_t>(mode)] = n - 1;
        m(space->flat_index(occ), i) = std::sqrt(static_cast<double>(n));
    }
    return OperatorMatrix(std::move(space), std::move(m));
}

OperatorMatrix OperatorMatrix::creation(SpacePtr space, int mode) {
    return annihilation(std::move(space), mode).adjoint();
}

OperatorMatrix OperatorMatrix::position(SpacePtr space, int mode) {
    auto a = annihilation(space, mode);
    Matrix m = (a.entries() + a.entries().adjoint().eval()) / kRoot2;
    OperatorMatrix op(std::move(space), std::move(m));
    op.set_hermitian();
    return op;
}

OperatorMatrix OperatorMatrix::momentum(SpacePtr space, int mode) {
    auto a = annihilation(space, mode);
    Matrix m = (a.entries() - a.entries().adjoint().eval()) / (cplx(0.0, 1.0) * kRoot2);
    OperatorMatrix op(std::move(space), std::move(m));
    op.set_hermitian();
    return op;
}

OperatorMatrix OperatorMatrix::number(SpacePtr space, int mode) {
    check_mode(space, mode);
    Index d = space->dimension();
    Matrix m = Matrix::Zero(d, d);
    for (Index i = 0; i < d; ++i)
        m(i, i) = static_cast<double>(space->occupations(i)[static_cast<std::size_t>(mode)]);
    OperatorMatrix op(std::move(space), std::move(m));
    op.hermitian_ = true;
    return op;
}

OperatorMatrix OperatorMatrix::total_number(SpacePtr space) {
    Index d = space->dimension();
    Matrix m = Matrix::Zero(d, d);
    for (Index i = 0; i < d; ++i) {
        int total = 0;
        for (int n : space->occupations(i)) total += n;
        m(i, i) = static_cast<double>(total);
    }
    OperatorMatrix op(std::move(space), std::move(m));
    op.hermitian_ = true;
    return op;
}

OperatorMatrix OperatorMatrix::rotation_generator(SpacePtr space, int mode_a, int mode_b) {
    check_mode(space, mode_a);
    check_mode(space, mode_b);
    require(mode_a != mode_b, errc::invalid_argument, "rotation generator needs two distinct modes");
    auto a = annihilation(space, mode_a);
    auto b = annihilation(space, mode_b);
    Matrix m = cplx(0.0, 1.0) *
               (a.entries().adjoint() * b.entries() - b.entries().adjoint() * a.entries());
    OperatorMatrix op(std::move(space), std::move(m));
    op.set_hermitian();
    return op;
}

OperatorMatrix OperatorMatrix::displacement(SpacePtr space, int mode, cplx alpha) {
    check_mode(space, mode);
    require(space->scheme() == Truncation::per_mode, errc::invalid_argument,
            "displacement needs a per_mode truncation");
    const int nd = space->mode_cutoffs()[static_cast<std::size_t>(mode)] + 1;
    const double a2 = std::norm(alpha);
    const double log_pref = -a2 / 2.0;

    // single-mode block <m|D|n>; diagonals m-n = ±k carry
    // sqrt(min!/max!) (±α or ∓α*)^k e^{-|α|²/2} L_min^{(k)}(|α|²),
    // with the Laguerre factor run by its three-term recurrence.
    Eigen::MatrixXcd block(nd, nd);
    for (int k = 0; k < nd; ++k) {
        // amplitude prefactors for the two k-offset diagonals
        cplx up = 1.0, down = 1.0;  // m = n + k and n = m + k
        double logfac = 0.0;        // log sqrt(n!/(n+k)!) accumulated below
        for (int j = 1; j <= k; ++j) logfac -= 0.5 * std::log(static_cast<double>(j));
        up = std::pow(alpha, k);
        down = std::pow(-std::conj(alpha), k);

        double lprev = 0.0, lcur = 1.0;  // L_{-1}, L_0
        for (int n = 0; n + k < nd; ++n) {
            if (n > 0) {
                // L_n^{(k)} from L_{n-1}^{(k)}, L_{n-2}^{(k)}
                double lnext =
                    ((2.0 * (n - 1) + k + 1.0 - a2) * lcur - (n - 1.0 + k) * lprev) / n;
                lprev = lcur;
                lcur = lnext;
                logfac += 0.5 * (std::log(static_cast<double>(n)) -
                                 std::log(static_cast<double>(n + k)));
            }
            const double amp = std::exp(log_pref + logfac) * lcur;
            block(n + k, n) = up * amp;
            block(n, n + k) = down * amp;
        }
    }

    Index d = space->dimension();
    Matrix m = Matrix::Zero(d, d);
    std::vector<int> occ;
    for (Index col = 0; col < d; ++col) {
        occ = space->occupations(col);
        const int n = occ[static_cast<std::size_t>(mode)];
        for (int mrow = 0; mrow < nd; ++mrow) {
            occ[static_cast<std::size_t>(mode)] = mrow;
            m(space->flat_index(occ), col) = block(mrow, n);
        }
    }
    return OperatorMatrix(std::move(space), std::move(m));
}

Matrix& OperatorMatrix::mutable_entries() {
    hermitian_ = false;
    unitary_ = false;
    return m_;
}

double OperatorMatrix::hermiticity_residual() const {
    Matrix diff = m_ - m_.adjoint();
    if (diff.cwiseAbs().maxCoeff() == 0.0) return 0.0;
    double scale = std::max(spectral_norm(m_), 1e-300);
    return spectral_norm(diff) / scale;
}

void OperatorMatrix::set_hermitian() {
    require(hermiticity_residual() <= flag_tolerance, errc::not_hermitian,
            "hermiticity check failed");
    hermitian_ = true;
}

void OperatorMatrix::set_unitary() {
    double res = spectral_norm(Matrix(m_.adjoint() * m_ - Matrix::Identity(m_.rows(), m_.cols())));
    require(res <= flag_tolerance, errc::invalid_argument, "unitarity check failed");
    unitary_ = true;
}

OperatorMatrix OperatorMatrix::adjoint() const {
    OperatorMatrix out(space_, m_.adjoint());
    out.hermitian_ = hermitian_;
    out.unitary_ = unitary_;
    return out;
}

OperatorMatrix OperatorMatrix::scaled(cplx factor) const {
    OperatorMatrix out(space_, factor * m_);
    out.hermitian_ = hermitian_ && factor.imag() == 0.0;
    return out;
}

OperatorMatrix OperatorMatrix::plus(const OperatorMatrix& other) const {
    require_same_space(*this, other);
    OperatorMatrix out(space_, m_ + other.m_);
    out.hermitian_ = hermitian_ && other.hermitian_;
    return out;
}

OperatorMatrix OperatorMatrix::minus(const OperatorMatrix& other) const {
    require_same_space(*this, other);
    OperatorMatrix out(space_, m_ - other.m_);
    out.hermitian_ = hermitian_ && other.hermitian_;
    return out;
}

OperatorMatrix OperatorMatrix::times(const OperatorMatrix& other) const {
    require_same_space(*this, other);
    OperatorMatrix out(space_, m_ * other.m_);
    out.unitary_ = unitary_ && other.unitary_;
    return out;
}

Vector OperatorMatrix::apply(const Vector& v) const {
    require(v.size() == m_.cols(), errc::dimension_mismatch, "vector dimension mismatch");
    return m_ * v;
}

Matrix OperatorMatrix::interior_block() const {
    auto keep = space_->interior_states();
    Matrix out(keep.size(), keep.size());
    for (std::size_t r = 0; r < keep.size(); ++r)
        for (std::size_t c = 0; c < keep.size(); ++c) out(r, c) = m_(keep[r], keep[c]);
    return out;
}

void require_same_space(const OperatorMatrix& a, const OperatorMatrix& b) {
    require(a.space()->same(*b.space()), errc::dimension_mismatch,
            "operators live on different spaces");
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_same_space(a, b);
    return OperatorMatrix(a.space(), a.entries() * b.entries() - b.entries() * a.entries());
}

OperatorMatrix matrix_exponential(const OperatorMatrix& a, cplx t) {
    require(a.entries().allFinite(), errc::non_finite, "matrix exponential of non-finite entries");

    const double at = std::abs(t);
    const bool t_real = std::abs(t.imag()) <= 1e-15 * std::max(at, 1.0);
    const bool t_imag = std::abs(t.real()) <= 1e-15 * std::max(at, 1.0);

    if (a.hermitian_flag() && (t_real || t_imag)) {
        EigenSystem es = hermitian_eigensystem(a);
        Vector phase(es.values.size());
        for (Eigen::Index i = 0; i < es.values.size(); ++i)
            phase(i) = std::exp(t * es.values(i));
        OperatorMatrix out(a.space(), es.vectors * phase.asDiagonal() * es.vectors.adjoint());
        if (t_imag) out.set_unitary();
        if (t_real) out.set_hermitian();
        return out;
    }

    Matrix scaled = t * a.entries();
    OperatorMatrix out(a.space(), scaled.exp());
    require(out.entries().allFinite(), errc::non_finite, "matrix exponential diverged");
    return out;
}

EigenSystem hermitian_eigensystem(const OperatorMatrix& a) {
    require(a.hermitian_flag() || a.hermiticity_residual() <= OperatorMatrix::flag_tolerance,
            errc::not_hermitian, "eigendecomposition requires a hermitian operator");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(a.entries());
    require(solver.info() == Eigen::Success, errc::invalid_argument, "eigensolver failed");
    return EigenSystem{solver.eigenvalues(), solver.eigenvectors()};
}

double spectral_norm(const Matrix& m) {
    if (m.rows() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m.adjoint() * m, Eigen::EigenvaluesOnly);
    double top = solver.eigenvalues().cwiseMax(0.0).maxCoeff();
    return std::sqrt(top);
}

double spectral_norm_hermitian(const Matrix& m) {
    if (m.rows() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace fockproj
