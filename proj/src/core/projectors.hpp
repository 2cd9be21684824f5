#ifndef FOCKPROJ_CORE_PROJECTORS_HPP
#define FOCKPROJ_CORE_PROJECTORS_HPP

#include <optional>
#include <string>
#include <vector>

#include "operator_matrix.hpp"
#include "quadrature.hpp"

namespace fockproj {

enum class ConstraintClass { unverified, closed_first_class, open_first_class, second_class };

/*
 * A set of hermitian constraint operators, optionally with structure
 * constants c_ab^c and h_a^b. The classification is only ever assigned by
 * check operations.
 */
struct ConstraintSet {
    std::vector<OperatorMatrix> phis;
    // structure_c[a][b][c] multiplies Phi_c in [Phi_a, Phi_b] = i c_ab^c Phi_c
    std::optional<std::vector<std::vector<std::vector<double>>>> structure_c;
    // structure_h[a][b] multiplies Phi_b in [Phi_a, H] = i h_a^b Phi_b
    std::optional<std::vector<std::vector<double>>> structure_h;
    ConstraintClass classification = ConstraintClass::unverified;

    static ConstraintSet single(OperatorMatrix phi);  // c = h = 0
};

struct FirstClassReport {
    double residual_cc = 0.0;  // closure of [Phi_a, Phi_b], interior states
    double residual_ch = 0.0;  // closure of [Phi_a, H]
    bool closed_first_class = false;
};

// Checks the closure relations on interior states and updates
// cs.classification when both residuals pass 1e-10.
FirstClassReport check_closed_first_class(ConstraintSet& cs, const OperatorMatrix& hamiltonian);

enum class ProjectorMethod { group_average_u1, spectral_kernel, gaussian_pair, custom_weight };

struct Projector {
    OperatorMatrix matrix;
    ProjectorMethod method;
    double idempotency_residual = 0.0;
    double hermiticity_residual = 0.0;
    int rank = 0;
    double trace_defect = 0.0;  // |trace - rank|
    bool valid = false;
    bool empty_subspace = false;
    std::string invalid_reason;
    // residual between the last two quadrature refinements, when the
    // construction is a numerical integral
    double refinement_residual = 0.0;

    Vector apply(const Vector& v) const { return matrix.apply(v); }
};

inline constexpr double projector_residual_tolerance = 1e-10;
inline constexpr double spectral_zero_tolerance_default = 1e-10;

// Discrete U(1) group average (1/K) sum_k exp(-i 2πk/K Phi) for a hermitian
// constraint with numerically integer spectrum. Exact spectral projection
// onto the zero eigenspace when K > 2·max|λ|; smaller K aliases eigenvalues
// that are multiples of K and the result is marked invalid.
Projector projector_group_average_u1(const OperatorMatrix& phi, int average_points);

// Null-space projector of C = sum_a Phi_a², keeping eigenvectors with
// λ <= zero_tol·λ_max. An empty null space yields a valid rank-0 projector
// flagged empty_subspace.
Projector projector_spectral(const std::vector<OperatorMatrix>& phis,
                             double zero_tol = spectral_zero_tolerance_default);
Projector projector_spectral(const ConstraintSet& cs,
                             double zero_tol = spectral_zero_tolerance_default);

// Gaussian-weighted integral of displacement operators over the canonical
// pair (momentum, position) of one mode:
//   E = ∫ exp(-i(ξ1 R + ξ2 S)) exp(-(ξ1²+ξ2²)/4) dξ1 dξ2 / 2π.
// The integrand is the exact displacement matrix projected onto the basis,
// so the result reproduces the vacuum projector of that mode up to
// quadrature error. per_mode spaces only.
Projector projector_gaussian_pair(SpacePtr space, int mode, int nodes_per_axis = 64,
                                  double halfwidth = 10.0);

enum class WeightKind { uniform_circle, gaussian, single_node };

struct WeightSpec {
    WeightKind kind = WeightKind::uniform_circle;
    // uniform_circle: K equally spaced nodes on [0, 2π)
    int circle_nodes = 0;
    // gaussian: exp(-|ξ|²/4)/(2π)^(A/2)-style weight over [-halfwidth, halfwidth]^A
    int nodes_per_axis = 64;
    double halfwidth = 10.0;
};

// Generic quadrature of exp(-i ξ·Φ) f(ξ) with matrix exponentials of the
// truncated generators. Constraints that leak out of the truncation inherit
// its artifacts; prefer projector_gaussian_pair for a canonical pair.
Projector projector_weighted_integral(const std::vector<OperatorMatrix>& phis,
                                      const WeightSpec& weight);

struct DiagnosticsReport {
    double idempotency_residual = 0.0;
    double hermiticity_residual = 0.0;
    int rank = 0;
    // max over supplied τ of ‖exp(-i τ·Φ) E − E‖; first-class projectors
    // satisfy this at round-off, second-class ones do not (reported, never
    // enforced)
    double invariance_residual = 0.0;
};

DiagnosticsReport projector_diagnostics(const Projector& e, const ConstraintSet* cs,
                                        const std::vector<std::vector<double>>& taus);

}  // namespace fockproj

#endif
