#ifndef FOCKPROJ_CORE_COHERENT_HPP
#define FOCKPROJ_CORE_COHERENT_HPP

#include <functional>

#include "projectors.hpp"

namespace fockproj {

// Two phase conventions for the displaced vacuum: `weyl` is the symmetric
// displacement exp(i(p·Q − q·P))|0>, `canonical` is exp(-iq·P) exp(ip·Q)|0>.
// They differ by the constant phase exp(-i p·q/2).
enum class Convention { canonical, weyl };

struct CoherentLabel {
    Eigen::VectorXd p;
    Eigen::VectorXd q;
    Convention convention = Convention::canonical;

    static CoherentLabel make(std::vector<double> p, std::vector<double> q,
                              Convention convention = Convention::canonical);
    static CoherentLabel from_z(const std::vector<cplx>& z,
                                Convention convention = Convention::weyl);

    int modes() const { return static_cast<int>(p.size()); }
    cplx z(int mode) const;  // (q_j + i p_j)/√2, recomputed on demand
    double z_norm_sq() const;
    double pq_dot() const { return p.dot(q); }
    CoherentLabel as(Convention c) const;
};

struct StateVector {
    SpacePtr space;
    Vector amplitudes;
    // 1 − ‖amplitudes‖² for states with truncated closed-form coefficients
    double norm_deficit = 0.0;
    bool truncated_analytic = false;
};

// Coherent state from the truncated closed-form coefficients
// e^{-|z|²/2} ∏ z_j^{n_j}/√(n_j!); the canonical convention applies the
// bridge phase on top. The amplitudes of labels with weight beyond the
// truncation are left unnormalized and the lost mass is recorded.
StateVector coherent_state(const SpacePtr& space, const CoherentLabel& label);

// exp(-½‖z_a‖² + z_a*·z_b − ½‖z_b‖²) with per-label bridge phases when a
// label is canonical.
cplx overlap_closed_form(const CoherentLabel& a, const CoherentLabel& b);

cplx matrix_overlap(const StateVector& a, const StateVector& b);

// <p,q|H|p,q> / <p,q|p,q>; the division compensates the truncation deficit
cplx upper_symbol(const OperatorMatrix& hamiltonian, const CoherentLabel& label);

// Spectral-norm residual of the quadrature resolution of unity
// Σ w |p,q><p,q| / (2π)^J − 1 restricted to basis states with total quanta
// <= quanta_cut (a negative cut selects the empty subspace). Uniform
// trapezoid grid over [-box, box]^{2J}, at least 8 points per axis.
double unity_resolution_residual(const SpacePtr& space, double box, int points_per_axis,
                                 int quanta_cut);

struct RescaledState {
    CoherentLabel label;
    Vector amplitudes;        // unit norm
    double normalization;     // M = ‖E|p,q>‖
};

// |p,q>> = E|p,q> / ‖E|p,q>‖; labels annihilated by E are rejected.
RescaledState rescaled_state(const CoherentLabel& label, const Projector& e);

using LabelPath = std::function<CoherentLabel(double)>;

struct OneFormCheck {
    double max_abs_error = 0.0;
    std::vector<double> lhs_real;  // per sample
    std::vector<double> rhs;
};

// Checks, on a two-mode space with the vacuum-pair projector E of the second
// mode, that the finite-difference connection form i<<x|d/dt|x>> of the
// rescaled states matches p q̇ − Im d/dt ln<0_2|r,s> along the path. Labels
// must be canonical; the second mode carries the constrained pair (r, s).
OneFormCheck geometric_one_form_check(const SpacePtr& space, const Projector& e,
                                      const LabelPath& path, const std::vector<double>& ts,
                                      double step);

}  // namespace fockproj

#endif
