#include "coherent.hpp"

#include <cmath>

namespace fockproj {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kRoot2 = 1.4142135623730951;

}  // namespace

CoherentLabel CoherentLabel::make(std::vector<double> p, std::vector<double> q,
                                  Convention convention) {
    require(!p.empty() && p.size() == q.size(), errc::dimension_mismatch,
            "label needs matching nonempty p and q");
    CoherentLabel label;
    label.p = Eigen::Map<Eigen::VectorXd>(p.data(), static_cast<Eigen::Index>(p.size()));
    label.q = Eigen::Map<Eigen::VectorXd>(q.data(), static_cast<Eigen::Index>(q.size()));
    label.convention = convention;
    return label;
}

CoherentLabel CoherentLabel::from_z(const std::vector<cplx>& z, Convention convention) {
    std::vector<double> p(z.size()), q(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) {
        q[j] = kRoot2 * z[j].real();
        p[j] = kRoot2 * z[j].imag();
    }
    return make(std::move(p), std::move(q), convention);
}

cplx CoherentLabel::z(int mode) const {
    require(mode >= 0 && mode < modes(), errc::mode_out_of_range, "label mode out of range");
    return cplx(q(mode), p(mode)) / kRoot2;
}

double CoherentLabel::z_norm_sq() const { return 0.5 * (p.squaredNorm() + q.squaredNorm()); }

CoherentLabel CoherentLabel::as(Convention c) const {
    CoherentLabel out = *this;
    out.convention = c;
    return out;
}

StateVector coherent_state(const SpacePtr& space, const CoherentLabel& label) {
    require(label.modes() == space->modes(), errc::dimension_mismatch,
            "label mode count does not match the space");

    // per-mode power tables z^n/√(n!)
    std::vector<std::vector<cplx>> pw(static_cast<std::size_t>(space->modes()));
    for (int j = 0; j < space->modes(); ++j) {
        int top = space->mode_cutoffs()[static_cast<std::size_t>(j)];
        auto& t = pw[static_cast<std::size_t>(j)];
        t.resize(static_cast<std::size_t>(top) + 1);
        t[0] = 1.0;
        cplx zj = label.z(j);
        for (int n = 1; n <= top; ++n)
            t[static_cast<std::size_t>(n)] =
                t[static_cast<std::size_t>(n - 1)] * zj / std::sqrt(static_cast<double>(n));
    }

    cplx prefactor = std::exp(-0.5 * label.z_norm_sq());
    if (label.convention == Convention::canonical)
        prefactor *= std::exp(cplx(0.0, -0.5 * label.pq_dot()));

    StateVector state;
    state.space = space;
    state.amplitudes.resize(space->dimension());
    for (Index i = 0; i < space->dimension(); ++i) {
        const auto& occ = space->occupations(i);
        cplx amp = prefactor;
        for (int j = 0; j < space->modes(); ++j)
            amp *= pw[static_cast<std::size_t>(j)][static_cast<std::size_t>(occ[j])];
        state.amplitudes(i) = amp;
    }
    state.norm_deficit = 1.0 - state.amplitudes.squaredNorm();
    state.truncated_analytic = true;
    return state;
}

cplx overlap_closed_form(const CoherentLabel& a, const CoherentLabel& b) {
    require(a.modes() == b.modes(), errc::dimension_mismatch, "label mode counts differ");
    cplx cross = 0.0;
    for (int j = 0; j < a.modes(); ++j) cross += std::conj(a.z(j)) * b.z(j);
    cplx value = std::exp(-0.5 * a.z_norm_sq() + cross - 0.5 * b.z_norm_sq());
    if (a.convention == Convention::canonical) value *= std::exp(cplx(0.0, 0.5 * a.pq_dot()));
    if (b.convention == Convention::canonical) value *= std::exp(cplx(0.0, -0.5 * b.pq_dot()));
    return value;
}

cplx matrix_overlap(const StateVector& a, const StateVector& b) {
    require(a.space->same(*b.space), errc::dimension_mismatch, "states live on different spaces");
    return a.amplitudes.dot(b.amplitudes);  // Eigen dot conjugates the left argument
}

cplx upper_symbol(const OperatorMatrix& hamiltonian, const CoherentLabel& label) {
    StateVector state = coherent_state(hamiltonian.space(), label);
    double nrm2 = state.amplitudes.squaredNorm();
    require(nrm2 > 1e-26, errc::annihilated_state, "coherent label has no mass in the truncation");
    cplx expectation = state.amplitudes.dot(hamiltonian.entries() * state.amplitudes);
    return expectation / nrm2;
}

double unity_resolution_residual(const SpacePtr& space, double box, int points_per_axis,
                                 int quanta_cut) {
    require(points_per_axis >= 8, errc::invalid_argument,
            "resolution-of-unity grid needs at least 8 points per axis");
    require(box > 0.0, errc::invalid_argument, "grid box must be positive");

    std::vector<Index> keep;
    for (Index i = 0; i < space->dimension(); ++i) {
        int total = 0;
        for (int n : space->occupations(i)) total += n;
        if (total <= quanta_cut) keep.push_back(i);
    }
    if (keep.empty()) return 0.0;

    const int J = space->modes();
    QuadratureRule axis = trapezoid(points_per_axis, -box, box);
    const int axes = 2 * J;

    Matrix sum = Matrix::Zero(space->dimension(), space->dimension());
    std::vector<int> digit(static_cast<std::size_t>(axes), 0);
    std::vector<double> pvals(static_cast<std::size_t>(J)), qvals(static_cast<std::size_t>(J));
    const double measure = 1.0 / std::pow(2.0 * kPi, J);
    while (true) {
        double w = measure;
        for (int ax = 0; ax < axes; ++ax) w *= axis.weights[static_cast<std::size_t>(digit[ax])];
        for (int j = 0; j < J; ++j) {
            pvals[static_cast<std::size_t>(j)] = axis.nodes[static_cast<std::size_t>(digit[2 * j])];
            qvals[static_cast<std::size_t>(j)] =
                axis.nodes[static_cast<std::size_t>(digit[2 * j + 1])];
        }
        StateVector st = coherent_state(
            space, CoherentLabel::make(pvals, qvals, Convention::weyl));
        sum.noalias() += w * (st.amplitudes * st.amplitudes.adjoint());

        int ax = axes - 1;
        while (ax >= 0 && ++digit[static_cast<std::size_t>(ax)] == points_per_axis)
            digit[static_cast<std::size_t>(ax--)] = 0;
        if (ax < 0) break;
    }

    Matrix block(keep.size(), keep.size());
    for (std::size_t r = 0; r < keep.size(); ++r)
        for (std::size_t c = 0; c < keep.size(); ++c)
            block(r, c) = sum(keep[r], keep[c]) - (keep[r] == keep[c] ? 1.0 : 0.0);
    return spectral_norm(block);
}

RescaledState rescaled_state(const CoherentLabel& label, const Projector& e) {
    StateVector st = coherent_state(e.matrix.space(), label);
    Vector projected = e.apply(st.amplitudes);
    double m = projected.norm();
    require(m > 1e-13, errc::annihilated_state, "projector annihilates this coherent label");
    return RescaledState{label, projected / m, m};
}

OneFormCheck geometric_one_form_check(const SpacePtr& space, const Projector& e,
                                      const LabelPath& path, const std::vector<double>& ts,
                                      double step) {
    require(space->modes() == 2, errc::invalid_argument,
            "one-form check runs on a two-degree-of-freedom space");
    require(step > 0.0 && step <= 0.1, errc::invalid_argument,
            "finite-difference step too large for stability");

    auto rescaled_at = [&](double t) {
        CoherentLabel label = path(t);
        require(label.convention == Convention::canonical, errc::invalid_argument,
                "one-form paths use canonical labels");
        return rescaled_state(label, e).amplitudes;
    };

    OneFormCheck out;
    const double hl = 1e-6;  // label-velocity step, only feeds the analytic side
    for (double t : ts) {
        Vector mid = rescaled_at(t);
        Vector plus = rescaled_at(t + step);
        Vector minus = rescaled_at(t - step);
        cplx lhs = cplx(0.0, 1.0) * mid.dot((plus - minus) / (2.0 * step));

        CoherentLabel lp = path(t + hl), lm = path(t - hl), l0 = path(t);
        double qdot = (lp.q(0) - lm.q(0)) / (2.0 * hl);
        double rdot = (lp.p(1) - lm.p(1)) / (2.0 * hl);
        double sdot = (lp.q(1) - lm.q(1)) / (2.0 * hl);
        // Im ln<0_2|r,s> = -r s / 2 for canonical labels
        double rhs = l0.p(0) * qdot + 0.5 * (rdot * l0.q(1) + l0.p(1) * sdot);

        out.lhs_real.push_back(lhs.real());
        out.rhs.push_back(rhs);
        out.max_abs_error = std::max(out.max_abs_error, std::abs(lhs - rhs));
    }
    return out;
}

}  // namespace fockproj
