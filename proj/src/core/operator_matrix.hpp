#ifndef FOCKPROJ_CORE_OPERATOR_MATRIX_HPP
#define FOCKPROJ_CORE_OPERATOR_MATRIX_HPP

#include <Eigen/Dense>
#include <complex>

#include "fock_space.hpp"

namespace fockproj {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/*
 * Dense complex square matrix attached to a FockSpace, with verified
 * structural flags. The flags are never trusted from outside: set_hermitian /
 * set_unitary re-check the defining property at 1e-12 (relative to the
 * spectral norm for hermiticity, absolute for unitarity).
 */
class OperatorMatrix {
public:
    static constexpr double flag_tolerance = 1e-12;

    OperatorMatrix(SpacePtr space, Matrix entries);

    static OperatorMatrix zero(SpacePtr space);
    static OperatorMatrix identity(SpacePtr space);

    // ladder and quadrature operators; transitions leaving the truncated
    // basis are dropped
    static OperatorMatrix annihilation(SpacePtr space, int mode);
    static OperatorMatrix creation(SpacePtr space, int mode);
    static OperatorMatrix position(SpacePtr space, int mode);   // (a + a†)/√2
    static OperatorMatrix momentum(SpacePtr space, int mode);   // (a − a†)/(i√2)
    static OperatorMatrix number(SpacePtr space, int mode);
    static OperatorMatrix total_number(SpacePtr space);

    // i(a_a† a_b − a_b† a_a): generator of rotations mixing two modes;
    // preserves total quanta, so it is exactly representable on
    // total_quanta spaces
    static OperatorMatrix rotation_generator(SpacePtr space, int mode_a, int mode_b);

    // Matrix elements <m|exp(α a† − α* a)|n> of the exact (untruncated)
    // displacement operator, projected onto the basis. per_mode spaces only:
    // a total-quanta truncation cannot hold a single-mode displacement.
    static OperatorMatrix displacement(SpacePtr space, int mode, cplx alpha);

    const SpacePtr& space() const { return space_; }
    Index dimension() const { return space_->dimension(); }
    const Matrix& entries() const { return m_; }
    Matrix& mutable_entries();  // clears flags

    bool hermitian_flag() const { return hermitian_; }
    bool unitary_flag() const { return unitary_; }
    void set_hermitian();  // verifies, throws not_hermitian on failure
    void set_unitary();    // verifies, throws invalid_argument on failure
    double hermiticity_residual() const;  // ‖A − A†‖ / max(‖A‖, eps)

    OperatorMatrix adjoint() const;
    OperatorMatrix scaled(cplx factor) const;
    OperatorMatrix plus(const OperatorMatrix& other) const;
    OperatorMatrix minus(const OperatorMatrix& other) const;
    OperatorMatrix times(const OperatorMatrix& other) const;
    Vector apply(const Vector& v) const;
    cplx trace() const { return m_.trace(); }

    // submatrix over states admitting one more quantum in every mode
    Matrix interior_block() const;

private:
    SpacePtr space_;
    Matrix m_;
    bool hermitian_ = false;
    bool unitary_ = false;
};

void require_same_space(const OperatorMatrix& a, const OperatorMatrix& b);

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);

// exp(t A). Hermitian A with purely real or purely imaginary t goes through
// the eigendecomposition (imaginary t yields a verified-unitary result);
// anything else falls back to scaling-and-squaring.
OperatorMatrix matrix_exponential(const OperatorMatrix& a, cplx t);

struct EigenSystem {
    Eigen::VectorXd values;  // ascending
    Matrix vectors;          // columns; unitary
};

// requires the hermitian property (verified at flag tolerance)
EigenSystem hermitian_eigensystem(const OperatorMatrix& a);

double spectral_norm(const Matrix& m);
inline double spectral_norm(const OperatorMatrix& a) { return spectral_norm(a.entries()); }

// max |eigenvalue|; only valid for hermitian input, cheaper than the
// general route through A†A
double spectral_norm_hermitian(const Matrix& m);

}  // namespace fockproj

#endif
