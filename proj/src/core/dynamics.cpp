#include "dynamics.hpp"

#include <cmath>

#include "special_functions.hpp"

namespace fockproj {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void check_guard(const CoherentLabel& label) {
    for (int j = 0; j < label.modes(); ++j)
        require(std::abs(label.z(j)) <= label_magnitude_guard, errc::guard_exceeded,
                "coherent label beyond the |z| magnitude guard");
}

Matrix matrix_power(Matrix base, int exponent) {
    Matrix acc = Matrix::Identity(base.rows(), base.cols());
    while (exponent > 0) {
        if (exponent & 1) acc = base * acc;
        exponent >>= 1;
        if (exponent > 0) base = base * base;
    }
    return acc;
}

}  // namespace

TrotterPlan TrotterPlan::zero_multipliers(double total_time, int slices, int constraints) {
    TrotterPlan plan;
    plan.total_time = total_time;
    plan.slices = slices;
    plan.lambda_schedule.assign(static_cast<std::size_t>(slices),
                                std::vector<double>(static_cast<std::size_t>(constraints), 0.0));
    return plan;
}

OperatorMatrix evolve_projected_trotter(const OperatorMatrix& hamiltonian, const Projector& e,
                                        double total_time, int slices) {
    require_same_space(hamiltonian, e.matrix);
    require(slices >= 1, errc::invalid_argument, "at least one slice");

    OperatorMatrix step = matrix_exponential(hamiltonian, cplx(0.0, -total_time / slices));
    Matrix step_proj = step.entries() * e.matrix.entries();
    return OperatorMatrix(hamiltonian.space(),
                          e.matrix.entries() * matrix_power(std::move(step_proj), slices));
}

OperatorMatrix evolve_projected_exact(const OperatorMatrix& hamiltonian, const Projector& e,
                                      double total_time) {
    require_same_space(hamiltonian, e.matrix);
    const Matrix& em = e.matrix.entries();
    OperatorMatrix compressed(hamiltonian.space(), em * hamiltonian.entries() * em);
    require(compressed.hermiticity_residual() <= 1e-10, errc::not_hermitian,
            "EHE is not hermitian");
    Matrix& sym = compressed.mutable_entries();
    sym = 0.5 * (sym + sym.adjoint().eval());
    compressed.set_hermitian();

    OperatorMatrix evolution = matrix_exponential(compressed, cplx(0.0, -total_time));
    return OperatorMatrix(hamiltonian.space(), em * evolution.entries() * em);
}

OperatorMatrix evolve_with_multipliers(const OperatorMatrix& hamiltonian, const ConstraintSet& cs,
                                       const Projector& e, const TrotterPlan& plan) {
    require_same_space(hamiltonian, e.matrix);
    require(static_cast<int>(plan.lambda_schedule.size()) == plan.slices, errc::invalid_argument,
            "schedule length must equal the slice count");

    const double eps = plan.epsilon();
    Matrix acc = e.matrix.entries();
    for (const auto& lambda : plan.lambda_schedule) {
        require(lambda.size() == cs.phis.size(), errc::invalid_argument,
                "multiplier vector length must match the constraint count");
        OperatorMatrix gen = hamiltonian;
        Matrix& g = gen.mutable_entries();
        for (std::size_t a = 0; a < cs.phis.size(); ++a) g += lambda[a] * cs.phis[a].entries();
        gen.set_hermitian();
        acc = matrix_exponential(gen, cplx(0.0, -eps)).entries() * acc;
    }
    return OperatorMatrix(hamiltonian.space(), std::move(acc));
}

KernelReport kernel_grid(const OperatorMatrix& op,
                         const std::vector<std::pair<CoherentLabel, CoherentLabel>>& labels) {
    KernelReport report;
    for (const auto& [bra, ket] : labels) {
        check_guard(bra);
        check_guard(ket);
        StateVector vb = coherent_state(op.space(), bra.as(Convention::weyl));
        StateVector vk = coherent_state(op.space(), ket.as(Convention::weyl));
        KernelEntry entry;
        entry.bra = bra;
        entry.ket = ket;
        entry.matrix_value = vb.amplitudes.dot(op.entries() * vk.amplitudes);
        report.entries.push_back(std::move(entry));
    }
    return report;
}

cplx example1_closed_form(const CoherentLabel& bra, const CoherentLabel& ket) {
    require(bra.modes() == 2 && ket.modes() == 2, errc::dimension_mismatch,
            "the rotation-invariant kernel lives on two modes");
    cplx zb1 = std::conj(bra.z(0)), zb2 = std::conj(bra.z(1));
    cplx zk1 = ket.z(0), zk2 = ket.z(1);
    cplx argument = std::sqrt((zb1 * zb1 + zb2 * zb2) * (zk1 * zk1 + zk2 * zk2));
    // I0 is even, so the branch of the square root does not matter
    return std::exp(-0.5 * (bra.z_norm_sq() + ket.z_norm_sq())) * bessel_i0(argument);
}

KernelReport example1_kernel_report(
    const OperatorMatrix& projector,
    const std::vector<std::pair<CoherentLabel, CoherentLabel>>& labels) {
    KernelReport report = kernel_grid(projector, labels);
    for (auto& entry : report.entries) {
        entry.closed_form_value = example1_closed_form(entry.bra, entry.ket);
        entry.has_closed_form = true;
        entry.abs_error = std::abs(entry.matrix_value - entry.closed_form_value);
        double scale = std::abs(entry.closed_form_value);
        entry.rel_error = scale > 0.0 ? entry.abs_error / scale : entry.abs_error;
        report.max_abs_error = std::max(report.max_abs_error, entry.abs_error);
    }
    return report;
}

OperatorMatrix vacuum_partial_expectation(const OperatorMatrix& hamiltonian, int traced_mode,
                                          const SpacePtr& reduced_space) {
    const SpacePtr& full = hamiltonian.space();
    require(full->scheme() == Truncation::per_mode && full->modes() == 2,
            errc::invalid_argument, "partial expectation handles two-mode per_mode spaces");
    require(traced_mode == 0 || traced_mode == 1, errc::mode_out_of_range, "bad traced mode");
    const int kept_mode = 1 - traced_mode;
    require(reduced_space->modes() == 1 &&
                reduced_space->mode_cutoffs()[0] ==
                    full->mode_cutoffs()[static_cast<std::size_t>(kept_mode)],
            errc::dimension_mismatch, "reduced space does not match the kept mode");

    Index dr = reduced_space->dimension();
    Matrix out(dr, dr);
    std::vector<int> row_occ(2), col_occ(2);
    for (Index r = 0; r < dr; ++r) {
        for (Index c = 0; c < dr; ++c) {
            row_occ[static_cast<std::size_t>(kept_mode)] = static_cast<int>(r);
            row_occ[static_cast<std::size_t>(traced_mode)] = 0;
            col_occ[static_cast<std::size_t>(kept_mode)] = static_cast<int>(c);
            col_occ[static_cast<std::size_t>(traced_mode)] = 0;
            out(r, c) = hamiltonian.entries()(full->flat_index(row_occ), full->flat_index(col_occ));
        }
    }
    return OperatorMatrix(reduced_space, std::move(out));
}

SecondClassReport example2_factorization(
    const OperatorMatrix& hamiltonian, const Projector& e, int constrained_mode,
    const std::vector<CoherentLabel>& sample_labels,
    const std::vector<std::pair<CoherentLabel, CoherentLabel>>& propagator_labels,
    double total_time, double measure_box, int measure_points) {
    const SpacePtr& full = hamiltonian.space();
    require(full->scheme() == Truncation::per_mode && full->modes() == 2,
            errc::invalid_argument, "two-mode per_mode space required");
    require_same_space(hamiltonian, e.matrix);
    const int kept_mode = 1 - constrained_mode;

    // the projector has to be the vacuum pair projector of the constrained mode
    {
        Index d = full->dimension();
        Matrix expected = Matrix::Zero(d, d);
        for (Index r = 0; r < d; ++r) {
            for (Index c = 0; c < d; ++c) {
                const auto& ro = full->occupations(r);
                const auto& co = full->occupations(c);
                if (ro[static_cast<std::size_t>(constrained_mode)] == 0 &&
                    co[static_cast<std::size_t>(constrained_mode)] == 0 &&
                    ro[static_cast<std::size_t>(kept_mode)] ==
                        co[static_cast<std::size_t>(kept_mode)])
                    expected(r, c) = 1.0;
            }
        }
        require(spectral_norm(Matrix(e.matrix.entries() - expected)) <= 1e-4,
                errc::invalid_argument,
                "projector is not the vacuum pair projector of the constrained mode");
    }

    SecondClassReport report;

    // <x|EHE|x>/<x|E|x> against the symbol at (p,q,0,0)
    const Matrix ehe = e.matrix.entries() * hamiltonian.entries() * e.matrix.entries();
    for (const CoherentLabel& label : sample_labels) {
        require(label.modes() == 2, errc::dimension_mismatch, "sample labels need two modes");
        StateVector st = coherent_state(full, label);
        cplx denom = st.amplitudes.dot(e.matrix.entries() * st.amplitudes);
        require(std::abs(denom) > 1e-20, errc::annihilated_state,
                "label annihilated by the projector");
        cplx lhs = st.amplitudes.dot(ehe * st.amplitudes) / denom;

        CoherentLabel zeroed = label;
        zeroed.p(constrained_mode) = 0.0;
        zeroed.q(constrained_mode) = 0.0;
        cplx rhs = upper_symbol(hamiltonian, zeroed);
        report.symbol_reduction_residual =
            std::max(report.symbol_reduction_residual, std::abs(lhs - rhs));
    }

    // propagator factorization against the reduced evolution
    SpacePtr reduced =
        FockSpace::per_mode({full->mode_cutoffs()[static_cast<std::size_t>(kept_mode)]});
    OperatorMatrix h_eff = vacuum_partial_expectation(hamiltonian, constrained_mode, reduced);
    Matrix& h_eff_m = h_eff.mutable_entries();
    h_eff_m = 0.5 * (h_eff_m + h_eff_m.adjoint().eval());
    h_eff.set_hermitian();
    OperatorMatrix reduced_prop = matrix_exponential(h_eff, cplx(0.0, -total_time));
    OperatorMatrix full_prop = evolve_projected_exact(hamiltonian, e, total_time);

    CoherentLabel vacuum_label = CoherentLabel::make({0.0}, {0.0}, Convention::canonical);
    auto mode_label = [](const CoherentLabel& l, int mode) {
        return CoherentLabel::make({l.p(mode)}, {l.q(mode)}, l.convention);
    };
    for (const auto& [bra, ket] : propagator_labels) {
        StateVector vb = coherent_state(full, bra);
        StateVector vk = coherent_state(full, ket);
        cplx k_full = vb.amplitudes.dot(full_prop.entries() * vk.amplitudes);

        StateVector rb = coherent_state(reduced, mode_label(bra, kept_mode));
        StateVector rk = coherent_state(reduced, mode_label(ket, kept_mode));
        cplx k_red = rb.amplitudes.dot(reduced_prop.entries() * rk.amplitudes);
        cplx factor = overlap_closed_form(mode_label(bra, constrained_mode), vacuum_label) *
                      overlap_closed_form(vacuum_label, mode_label(ket, constrained_mode));
        report.factorization_residual =
            std::max(report.factorization_residual, std::abs(k_full - k_red * factor));
    }

    // ∫ |<0_2|r,s>|² dr ds / (2π) = 1 with the closed-form overlap
    QuadratureRule axis = trapezoid(measure_points, -measure_box, measure_box);
    double integral = 0.0;
    for (int i = 0; i < measure_points; ++i)
        for (int j = 0; j < measure_points; ++j) {
            double r = axis.nodes[static_cast<std::size_t>(i)];
            double s = axis.nodes[static_cast<std::size_t>(j)];
            double w = axis.weights[static_cast<std::size_t>(i)] *
                       axis.weights[static_cast<std::size_t>(j)];
            integral += w * std::exp(-(r * r + s * s) / 2.0) / (2.0 * kPi);
        }
    report.measure_normalization_error = std::abs(integral - 1.0);
    return report;
}

LatticeEquivalence lattice_equivalence_check(const OperatorMatrix& hamiltonian,
                                             const Projector& e, const CoherentLabel& bra,
                                             const CoherentLabel& ket, double total_time,
                                             int slices, double box, int points_per_axis) {
    require_same_space(hamiltonian, e.matrix);
    const SpacePtr& space = hamiltonian.space();
    require(space->dimension() <= 100, errc::invalid_argument,
            "lattice quadrature is restricted to spaces with D <= 100");
    require(slices >= 1, errc::invalid_argument, "at least one slice");

    const double eps = total_time / slices;
    OperatorMatrix step = matrix_exponential(hamiltonian, cplx(0.0, -eps));
    const Matrix& em = e.matrix.entries();

    StateVector vb = coherent_state(space, bra);
    StateVector vk = coherent_state(space, ket);

    LatticeEquivalence out;
    out.direct_value =
        vb.amplitudes.dot(evolve_projected_trotter(hamiltonian, e, total_time, slices).entries() *
                          vk.amplitudes);

    Vector eb = em * vb.amplitudes;
    Vector ek = em * vk.amplitudes;
    const double mb = eb.norm(), mk = ek.norm();
    require(mb > 1e-13 && mk > 1e-13, errc::annihilated_state,
            "projector annihilates an endpoint label");

    auto for_each_node = [&](auto&& body) {
        const int J = space->modes();
        const int axes = 2 * J;
        QuadratureRule axis = trapezoid(points_per_axis, -box, box);
        const double measure = 1.0 / std::pow(2.0 * kPi, J);
        std::vector<int> digit(static_cast<std::size_t>(axes), 0);
        std::vector<double> pv(static_cast<std::size_t>(J)), qv(static_cast<std::size_t>(J));
        while (true) {
            double w = measure;
            for (int ax = 0; ax < axes; ++ax)
                w *= axis.weights[static_cast<std::size_t>(digit[ax])];
            for (int j = 0; j < J; ++j) {
                pv[static_cast<std::size_t>(j)] =
                    axis.nodes[static_cast<std::size_t>(digit[2 * j])];
                qv[static_cast<std::size_t>(j)] =
                    axis.nodes[static_cast<std::size_t>(digit[2 * j + 1])];
            }
            body(w, coherent_state(space, CoherentLabel::make(pv, qv, Convention::weyl)));
            int ax = axes - 1;
            while (ax >= 0 && ++digit[static_cast<std::size_t>(ax)] == points_per_axis)
                digit[static_cast<std::size_t>(ax--)] = 0;
            if (ax < 0) break;
        }
    };

    // Eq-24 style: kernels <x'|E e^{-iεH} E|x> with Σ w |x><x| insertions
    {
        Matrix kernel_op = em * step.entries() * em;
        Vector right = kernel_op * vk.amplitudes;
        for (int boundary = 1; boundary < slices; ++boundary) {
            Vector folded = Vector::Zero(space->dimension());
            for_each_node([&](double w, const StateVector& sm) {
                folded += (w * sm.amplitudes.dot(right)) * sm.amplitudes;
            });
            right = kernel_op * folded;
        }
        out.projected_form = vb.amplitudes.dot(right);
    }

    // Eq-26 style: unit rescaled states with measure weights M² = <x|E|x>
    {
        Vector right = ek / mk;
        for (int boundary = 1; boundary < slices; ++boundary) {
            Vector moved = step.entries() * right;
            Vector folded = Vector::Zero(space->dimension());
            for_each_node([&](double w, const StateVector& sm) {
                Vector projected = em * sm.amplitudes;
                double m2 = projected.squaredNorm();
                if (m2 <= 1e-26) return;  // annihilated node, weight M² ~ 0
                Vector unit = projected / std::sqrt(m2);
                folded += (w * m2 * unit.dot(moved)) * unit;
            });
            right = folded;
        }
        out.rescaled_form = mb * mk * (eb / mb).dot(step.entries() * right);
    }

    out.form_residual = std::abs(out.projected_form - out.rescaled_form);
    out.quadrature_residual = std::abs(out.projected_form - out.direct_value);
    return out;
}

ConvergenceStudy trotter_convergence_study(
    const OperatorMatrix& hamiltonian, const Projector& e, double total_time,
    const std::vector<int>& slice_counts,
    const std::vector<std::pair<CoherentLabel, CoherentLabel>>& labels) {
    require(slice_counts.size() >= 2, errc::invalid_argument,
            "a convergence study needs at least two slice counts");

    OperatorMatrix exact = evolve_projected_exact(hamiltonian, e, total_time);

    ConvergenceStudy study;
    study.slice_counts = slice_counts;
    for (int n : slice_counts) {
        OperatorMatrix approx = evolve_projected_trotter(hamiltonian, e, total_time, n);
        OperatorMatrix diff(hamiltonian.space(), approx.entries() - exact.entries());
        KernelReport report = kernel_grid(diff, labels);
        double err = 0.0;
        for (const auto& entry : report.entries)
            err = std::max(err, std::abs(entry.matrix_value));
        study.errors.push_back(err);
    }

    // least-squares slope of log(error) against log(N)
    const std::size_t m = study.errors.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < m; ++i) {
        double x = std::log(static_cast<double>(slice_counts[i]));
        double y = std::log(std::max(study.errors[i], 1e-300));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    study.loglog_slope = -(m * sxy - sx * sy) / (m * sxx - sx * sx);
    study.reduction_factor = study.errors.front() / std::max(study.errors.back(), 1e-300);
    return study;
}

}  // namespace fockproj
