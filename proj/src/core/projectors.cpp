#include "projectors.hpp"

#include <cmath>

namespace fockproj {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Fills the law diagnostics and the validity verdict shared by every
// construction method.
void finalize(Projector& proj, const std::string& precondition_failure = "") {
    // symmetrize before diagnostics; quadrature noise need not be hermitian
    Matrix& m = proj.matrix.mutable_entries();
    m = 0.5 * (m + m.adjoint().eval());

    const Matrix& e = proj.matrix.entries();
    proj.hermiticity_residual = spectral_norm(Matrix(e - e.adjoint()));
    // e is hermitian after symmetrization, so e² − e is hermitian as well
    proj.idempotency_residual = spectral_norm_hermitian(Matrix(e * e - e));
    double tr = e.trace().real();
    proj.rank = static_cast<int>(std::lround(tr));
    proj.trace_defect = std::abs(tr - proj.rank);

    proj.valid = precondition_failure.empty() &&
                 proj.idempotency_residual <= projector_residual_tolerance &&
                 proj.hermiticity_residual <= projector_residual_tolerance &&
                 proj.trace_defect <= 1e-8;
    if (!precondition_failure.empty())
        proj.invalid_reason = precondition_failure;
    else if (!proj.valid)
        proj.invalid_reason = "projector laws violated beyond tolerance";
    if (proj.valid) proj.matrix.set_hermitian();
}

OperatorMatrix sum_squares(const std::vector<OperatorMatrix>& phis) {
    require(!phis.empty(), errc::invalid_argument, "constraint set is empty");
    for (const auto& phi : phis) require_same_space(phis.front(), phi);
    Matrix c = Matrix::Zero(phis.front().dimension(), phis.front().dimension());
    for (const auto& phi : phis) {
        require(phi.hermitian_flag() || phi.hermiticity_residual() <= OperatorMatrix::flag_tolerance,
                errc::not_hermitian, "constraint operator is not hermitian");
        c += phi.entries() * phi.entries();
    }
    return OperatorMatrix(phis.front().space(), std::move(c));
}

Matrix combined_exponent(const std::vector<OperatorMatrix>& phis, const std::vector<double>& xi) {
    Matrix g = Matrix::Zero(phis.front().dimension(), phis.front().dimension());
    for (std::size_t a = 0; a < phis.size(); ++a) g += xi[a] * phis[a].entries();
    return g;
}

}  // namespace

ConstraintSet ConstraintSet::single(OperatorMatrix phi) {
    ConstraintSet cs;
    cs.phis.push_back(std::move(phi));
    cs.structure_c = std::vector<std::vector<std::vector<double>>>(
        1, std::vector<std::vector<double>>(1, std::vector<double>(1, 0.0)));
    cs.structure_h = std::vector<std::vector<double>>(1, std::vector<double>(1, 0.0));
    return cs;
}

FirstClassReport check_closed_first_class(ConstraintSet& cs, const OperatorMatrix& hamiltonian) {
    FirstClassReport report;
    if (cs.phis.empty()) {
        cs.classification = ConstraintClass::closed_first_class;
        report.closed_first_class = true;
        return report;
    }
    require(cs.structure_c.has_value() && cs.structure_h.has_value(), errc::invalid_argument,
            "closure check needs structure constants");

    const std::size_t A = cs.phis.size();
    double phi_norm = 0.0;
    for (const auto& phi : cs.phis) phi_norm = std::max(phi_norm, spectral_norm(phi));
    const double h_norm = spectral_norm(hamiltonian);

    const cplx iunit(0.0, 1.0);
    for (std::size_t a = 0; a < A; ++a) {
        for (std::size_t b = 0; b < A; ++b) {
            OperatorMatrix lhs = commutator(cs.phis[a], cs.phis[b]);
            Matrix defect = lhs.entries();
            for (std::size_t c = 0; c < A; ++c)
                defect -= iunit * (*cs.structure_c)[a][b][c] * cs.phis[c].entries();
            OperatorMatrix d(cs.phis[a].space(), std::move(defect));
            report.residual_cc =
                std::max(report.residual_cc,
                         spectral_norm(d.interior_block()) / std::max(1.0, phi_norm * phi_norm));
        }
        OperatorMatrix lhs = commutator(cs.phis[a], hamiltonian);
        Matrix defect = lhs.entries();
        for (std::size_t b = 0; b < A; ++b)
            defect -= iunit * (*cs.structure_h)[a][b] * cs.phis[b].entries();
        OperatorMatrix d(cs.phis[a].space(), std::move(defect));
        report.residual_ch = std::max(
            report.residual_ch, spectral_norm(d.interior_block()) / std::max(1.0, phi_norm * h_norm));
    }

    report.closed_first_class = report.residual_cc <= 1e-10 && report.residual_ch <= 1e-10;
    if (report.closed_first_class) cs.classification = ConstraintClass::closed_first_class;
    return report;
}

Projector projector_group_average_u1(const OperatorMatrix& phi, int average_points) {
    require(average_points >= 2, errc::invalid_argument, "group average needs K >= 2");
    EigenSystem es = hermitian_eigensystem(phi);

    std::string precondition_failure;
    double max_integer_defect = 0.0;
    double spectral_radius = 0.0;
    for (Eigen::Index i = 0; i < es.values.size(); ++i) {
        double rounded = std::round(es.values(i));
        max_integer_defect = std::max(max_integer_defect, std::abs(es.values(i) - rounded));
        spectral_radius = std::max(spectral_radius, std::abs(rounded));
    }
    if (max_integer_defect > 1e-8)
        precondition_failure = "constraint spectrum is not numerically integer";
    else if (average_points < 2 * static_cast<int>(spectral_radius) + 1)
        precondition_failure = "K too small: eigenvalues alias to 0 mod K";

    // (1/K) sum_k exp(-i 2πk/K λ) applied eigenvalue-wise; the geometric sum
    // is the group average with the K matrix products folded through the
    // shared eigenbasis
    const int K = average_points;
    Vector gain(es.values.size());
    for (Eigen::Index i = 0; i < es.values.size(); ++i) {
        cplx acc = 0.0;
        for (int k = 0; k < K; ++k)
            acc += std::exp(cplx(0.0, -2.0 * kPi * k / K) * es.values(i));
        gain(i) = acc / static_cast<double>(K);
    }

    Projector proj{OperatorMatrix(phi.space(), es.vectors * gain.asDiagonal() * es.vectors.adjoint()),
                   ProjectorMethod::group_average_u1};
    finalize(proj, precondition_failure);
    proj.empty_subspace = proj.valid && proj.rank == 0;
    return proj;
}

Projector projector_spectral(const std::vector<OperatorMatrix>& phis, double zero_tol) {
    OperatorMatrix c = sum_squares(phis);
    c.set_hermitian();
    EigenSystem es = hermitian_eigensystem(c);

    const double lambda_max = std::max(es.values.cwiseAbs().maxCoeff(), 0.0);
    const double cut = zero_tol * std::max(lambda_max, 1e-300);
    Index d = c.dimension();
    Matrix e = Matrix::Zero(d, d);
    int kept = 0;
    for (Eigen::Index i = 0; i < es.values.size(); ++i) {
        if (es.values(i) <= cut) {
            e += es.vectors.col(i) * es.vectors.col(i).adjoint();
            ++kept;
        }
    }

    Projector proj{OperatorMatrix(c.space(), std::move(e)), ProjectorMethod::spectral_kernel};
    finalize(proj);
    proj.empty_subspace = kept == 0;
    return proj;
}

Projector projector_spectral(const ConstraintSet& cs, double zero_tol) {
    return projector_spectral(cs.phis, zero_tol);
}

namespace {

Matrix gaussian_pair_quadrature(const SpacePtr& space, int mode, int nodes, double halfwidth) {
    QuadratureRule rule = gauss_legendre(nodes, -halfwidth, halfwidth);
    Index d = space->dimension();
    Matrix acc = Matrix::Zero(d, d);
    for (int i = 0; i < nodes; ++i) {
        for (int j = 0; j < nodes; ++j) {
            const double xi1 = rule.nodes[static_cast<std::size_t>(i)];
            const double xi2 = rule.nodes[static_cast<std::size_t>(j)];
            // exp(-i(ξ1 R + ξ2 S)) = D(α), α = (ξ1 - iξ2)/√2
            const cplx alpha = cplx(xi1, -xi2) / std::sqrt(2.0);
            const double w = rule.weights[static_cast<std::size_t>(i)] *
                             rule.weights[static_cast<std::size_t>(j)] *
                             std::exp(-(xi1 * xi1 + xi2 * xi2) / 4.0) / (2.0 * kPi);
            acc += w * OperatorMatrix::displacement(space, mode, alpha).entries();
        }
    }
    return acc;
}

}  // namespace

Projector projector_gaussian_pair(SpacePtr space, int mode, int nodes_per_axis, double halfwidth) {
    require(nodes_per_axis >= 8, errc::invalid_argument, "gaussian pair quadrature too coarse");
    Matrix fine = gaussian_pair_quadrature(space, mode, nodes_per_axis, halfwidth);
    Matrix coarse = gaussian_pair_quadrature(space, mode, (3 * nodes_per_axis) / 4, halfwidth);
    double refinement = spectral_norm(Matrix(fine - coarse));
    require(refinement <= 1e-6, errc::quadrature_failure,
            "displacement quadrature did not converge");

    Projector proj{OperatorMatrix(std::move(space), std::move(fine)),
                   ProjectorMethod::gaussian_pair};
    proj.refinement_residual = refinement;
    finalize(proj);
    return proj;
}

Projector projector_weighted_integral(const std::vector<OperatorMatrix>& phis,
                                      const WeightSpec& weight) {
    require(!phis.empty(), errc::invalid_argument, "constraint set is empty");
    for (const auto& phi : phis) require_same_space(phis.front(), phi);
    const SpacePtr& space = phis.front().space();
    Index d = space->dimension();
    const cplx minus_i(0.0, -1.0);

    auto exponential_of = [&](const std::vector<double>& xi) {
        OperatorMatrix g(space, combined_exponent(phis, xi));
        g.set_hermitian();
        return matrix_exponential(g, minus_i).entries();
    };

    Matrix acc = Matrix::Zero(d, d);
    double refinement = 0.0;
    switch (weight.kind) {
        case WeightKind::single_node: {
            acc = exponential_of(std::vector<double>(phis.size(), 0.0));
            break;
        }
        case WeightKind::uniform_circle: {
            require(phis.size() == 1, errc::invalid_argument,
                    "uniform circle weight averages a single constraint");
            int K = weight.circle_nodes;
            require(K >= 2, errc::invalid_argument, "uniform weight needs at least two nodes");
            // (1/K) (I + U + ... + U^{K-1}) with U one step around the circle
            Matrix u = exponential_of({2.0 * kPi / K});
            Matrix power = Matrix::Identity(d, d);
            acc = power;
            for (int k = 1; k < K; ++k) {
                power = u * power;
                acc += power;
            }
            acc /= static_cast<double>(K);
            break;
        }
        case WeightKind::gaussian: {
            require(phis.size() == 2, errc::invalid_argument,
                    "gaussian weight is defined for a constraint pair");
            auto accumulate = [&](int nodes) {
                QuadratureRule rule = gauss_legendre(nodes, -weight.halfwidth, weight.halfwidth);
                Matrix sum = Matrix::Zero(d, d);
                for (int i = 0; i < nodes; ++i) {
                    for (int j = 0; j < nodes; ++j) {
                        double xi1 = rule.nodes[static_cast<std::size_t>(i)];
                        double xi2 = rule.nodes[static_cast<std::size_t>(j)];
                        double w = rule.weights[static_cast<std::size_t>(i)] *
                                   rule.weights[static_cast<std::size_t>(j)] *
                                   std::exp(-(xi1 * xi1 + xi2 * xi2) / 4.0) / (2.0 * kPi);
                        sum += w * exponential_of({xi1, xi2});
                    }
                }
                return sum;
            };
            require(weight.nodes_per_axis >= 8, errc::invalid_argument, "quadrature too coarse");
            acc = accumulate(weight.nodes_per_axis);
            refinement = spectral_norm(Matrix(acc - accumulate((3 * weight.nodes_per_axis) / 4)));
            require(refinement <= 1e-6, errc::quadrature_failure,
                    "weighted integral did not converge between refinements");
            break;
        }
    }

    Projector proj{OperatorMatrix(space, std::move(acc)), ProjectorMethod::custom_weight};
    proj.refinement_residual = refinement;
    finalize(proj);
    return proj;
}

DiagnosticsReport projector_diagnostics(const Projector& e, const ConstraintSet* cs,
                                        const std::vector<std::vector<double>>& taus) {
    DiagnosticsReport report;
    const Matrix& m = e.matrix.entries();
    report.idempotency_residual = spectral_norm(Matrix(m * m - m));
    report.hermiticity_residual = spectral_norm(Matrix(m - m.adjoint()));
    report.rank = static_cast<int>(std::lround(m.trace().real()));

    if (cs != nullptr && !cs->phis.empty()) {
        for (const auto& tau : taus) {
            require(tau.size() == cs->phis.size(), errc::invalid_argument,
                    "tau length does not match the constraint count");
            OperatorMatrix g(e.matrix.space(), combined_exponent(cs->phis, tau));
            g.set_hermitian();
            Matrix u = matrix_exponential(g, cplx(0.0, -1.0)).entries();
            report.invariance_residual =
                std::max(report.invariance_residual, spectral_norm(Matrix(u * m - m)));
        }
    }
    return report;
}

}  // namespace fockproj
