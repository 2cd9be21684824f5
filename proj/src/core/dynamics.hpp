#ifndef FOCKPROJ_CORE_DYNAMICS_HPP
#define FOCKPROJ_CORE_DYNAMICS_HPP

#include "coherent.hpp"

namespace fockproj {

struct TrotterPlan {
    double total_time = 1.0;
    int slices = 1;
    // one multiplier vector per slice, each of the constraint count
    std::vector<std::vector<double>> lambda_schedule;

    double epsilon() const { return total_time / slices; }
    static TrotterPlan zero_multipliers(double total_time, int slices, int constraints);
};

// E (e^{-i(T/N)H} E)^N: N exponential factors interleaved with N+1
// projections.
OperatorMatrix evolve_projected_trotter(const OperatorMatrix& hamiltonian, const Projector& e,
                                        double total_time, int slices);

// E e^{-iT(EHE)} E: unitary on range(E) when EHE is hermitian.
OperatorMatrix evolve_projected_exact(const OperatorMatrix& hamiltonian, const Projector& e,
                                      double total_time);

// Time-ordered lattice product [prod_l e^{-iε(H + λ_l·Φ)}] E, slice l = 1
// applied first.
OperatorMatrix evolve_with_multipliers(const OperatorMatrix& hamiltonian, const ConstraintSet& cs,
                                       const Projector& e, const TrotterPlan& plan);

struct KernelEntry {
    CoherentLabel bra;
    CoherentLabel ket;
    cplx matrix_value = 0.0;
    bool has_closed_form = false;
    cplx closed_form_value = 0.0;
    double abs_error = 0.0;
    double rel_error = 0.0;
};

struct KernelReport {
    std::vector<KernelEntry> entries;
    double max_abs_error = 0.0;  // over entries carrying a closed form
};

inline constexpr double label_magnitude_guard = 3.0;

// <bra|Op|ket> over label pairs with weyl-convention matrix states; labels
// beyond the |z| guard are rejected.
KernelReport kernel_grid(const OperatorMatrix& op,
                         const std::vector<std::pair<CoherentLabel, CoherentLabel>>& labels);

// Coherent-state kernel of the rotation-invariant subspace projector on two
// modes: exp(-½Σ|z|²) I0(√((z″₁*²+z″₂*²)(z′₁²+z′₂²))).
cplx example1_closed_form(const CoherentLabel& bra, const CoherentLabel& ket);

// Attaches the closed form to a kernel_grid run over E(L3 = 0).
KernelReport example1_kernel_report(const OperatorMatrix& projector,
                                    const std::vector<std::pair<CoherentLabel, CoherentLabel>>& labels);

struct SecondClassReport {
    // max |<x|EHE|x>/<x|E|x> − upper_symbol(H, (p,q,0,0))| over sampled labels
    double symbol_reduction_residual = 0.0;
    // max |K_full − K_reduced·<r″,s″|0><0|r′,s′>| over the label grid
    double factorization_residual = 0.0;
    // |∫ |<0_2|r,s>|² dr ds/(2π) − 1| by trapezoid quadrature
    double measure_normalization_error = 0.0;
};

// The two-degree-of-freedom reduction checks for E = 1 ⊗ |0_2><0_2|:
// the constrained mode is `constrained_mode` of a two-mode per_mode space.
SecondClassReport example2_factorization(const OperatorMatrix& hamiltonian, const Projector& e,
                                         int constrained_mode,
                                         const std::vector<CoherentLabel>& sample_labels,
                                         const std::vector<std::pair<CoherentLabel, CoherentLabel>>&
                                             propagator_labels,
                                         double total_time, double measure_box = 8.0,
                                         int measure_points = 129);

// Partial expectation <χ_c|H|χ_c> over one mode of a two-mode per_mode
// space, with χ the single-mode vacuum: an operator on the other mode.
OperatorMatrix vacuum_partial_expectation(const OperatorMatrix& hamiltonian, int traced_mode,
                                          const SpacePtr& reduced_space);

struct LatticeEquivalence {
    cplx direct_value = 0.0;    // <bra|E (e^{-iεH} E)^N|ket> as a matrix product
    cplx projected_form = 0.0;  // E e^{-iεH} E kernels, quadrature insertions Σ w |x><x|
    cplx rescaled_form = 0.0;   // unit states with measure weights Σ w M² |x>><<x|
    // the two lattice forms are algebraically identical; this residual is
    // round-off plus the skipped annihilated nodes
    double form_residual = 0.0;
    // quadrature quality of the intermediate resolutions of unity
    double quadrature_residual = 0.0;
};

// Evaluates the N-slice projected lattice kernel in its two equivalent forms
// with each intermediate resolution of unity replaced by phase-space
// quadrature (points^(2J) nodes per slice boundary; small spaces only).
LatticeEquivalence lattice_equivalence_check(const OperatorMatrix& hamiltonian,
                                             const Projector& e, const CoherentLabel& bra,
                                             const CoherentLabel& ket, double total_time,
                                             int slices, double box, int points_per_axis);

struct ConvergenceStudy {
    std::vector<int> slice_counts;
    std::vector<double> errors;      // kernel-grid max abs error per N
    double loglog_slope = 0.0;       // least-squares fit of log e vs log N
    double reduction_factor = 0.0;   // first error / last error
};

// Error of evolve_projected_trotter against evolve_projected_exact measured
// on a coherent kernel grid (Eq-22-style matrix elements).
ConvergenceStudy trotter_convergence_study(
    const OperatorMatrix& hamiltonian, const Projector& e, double total_time,
    const std::vector<int>& slice_counts,
    const std::vector<std::pair<CoherentLabel, CoherentLabel>>& labels);

}  // namespace fockproj

#endif
