#include "suite.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include <nlohmann/json.hpp>

#include "dynamics.hpp"

namespace fockproj {

namespace {

using nlohmann::ordered_json;

constexpr double kPi = 3.141592653589793238462643383279502884;

class PhaseClock {
public:
    explicit PhaseClock(std::vector<PhaseTiming>& sink) : sink_(sink) {}

    template <typename F>
    auto time(const std::string& phase, F&& body) {
        auto start = std::chrono::steady_clock::now();
        if constexpr (std::is_void_v<decltype(body())>) {
            body();
            record(phase, start);
        } else {
            auto out = body();
            record(phase, start);
            return out;
        }
    }

private:
    void record(const std::string& phase, std::chrono::steady_clock::time_point start) {
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        sink_.push_back({phase, seconds});
    }

    std::vector<PhaseTiming>& sink_;
};

Check check_le(std::string name, double value, double tolerance) {
    Check c{std::move(name), value, tolerance, Check::Cmp::le, 0.0, false};
    c.pass = value <= tolerance;
    return c;
}

Check check_ge(std::string name, double value, double tolerance) {
    Check c{std::move(name), value, tolerance, Check::Cmp::ge, 0.0, false};
    c.pass = value >= tolerance;
    return c;
}

Check check_range(std::string name, double value, double lo, double hi) {
    Check c{std::move(name), value, lo, Check::Cmp::range, hi, false};
    c.pass = value >= lo && value <= hi;
    return c;
}

// deterministic label sets ------------------------------------------------

std::vector<CoherentLabel> kernel_labels_two_mode(double scale) {
    std::vector<CoherentLabel> labels;
    for (int t = 0; t < 5; ++t) {
        double s = scale * (t + 1) / 5.0;
        double theta = 2.0 * kPi * t / 5.0;
        cplx z1 = 0.8 * s * std::exp(cplx(0.0, theta));
        cplx z2 = 0.6 * s * std::exp(cplx(0.0, theta + 0.7));
        labels.push_back(CoherentLabel::from_z({z1, z2}, Convention::weyl));
    }
    return labels;
}

std::vector<std::pair<CoherentLabel, CoherentLabel>> all_pairs(
    const std::vector<CoherentLabel>& labels) {
    std::vector<std::pair<CoherentLabel, CoherentLabel>> pairs;
    for (const auto& a : labels)
        for (const auto& b : labels) pairs.emplace_back(a, b);
    return pairs;
}

std::vector<std::pair<CoherentLabel, CoherentLabel>> trotter_labels(double scale) {
    std::vector<CoherentLabel> labels;
    for (int t = 0; t < 5; ++t) {
        double theta = 2.0 * kPi * t / 5.0;
        cplx z1 = 0.7 * scale * std::exp(cplx(0.0, theta));
        cplx z2 = 0.5 * scale * std::exp(cplx(0.0, theta + 0.9));
        labels.push_back(CoherentLabel::from_z({z1, z2}, Convention::weyl));
    }
    return all_pairs(labels);
}

// subcommand runners -------------------------------------------------------

void run_projector_suite(const RunConfig& cfg, RunReport& report, PhaseClock& clock) {
    std::vector<int> sweep = *cfg.cutoff_sweep;
    double worst_agreement = 0.0, worst_rank = 0.0, worst_idem = 0.0, worst_herm = 0.0;
    double closure_cc = 0.0, closure_ch = 0.0, invariance = 0.0;

    clock.time("projector_family", [&] {
        for (int nmax : sweep) {
            SpacePtr space = FockSpace::total_quanta(2, nmax);
            OperatorMatrix l3 = OperatorMatrix::rotation_generator(space, 0, 1);
            Projector group = projector_group_average_u1(l3, 2 * nmax + 1);
            Projector spectral = projector_spectral({l3});

            worst_agreement = std::max(
                worst_agreement,
                spectral_norm(Matrix(group.matrix.entries() - spectral.matrix.entries())));
            int expected_rank = nmax / 2 + 1;
            worst_rank = std::max({worst_rank, std::abs(double(group.rank - expected_rank)),
                                   std::abs(double(spectral.rank - expected_rank))});
            worst_idem = std::max({worst_idem, group.idempotency_residual,
                                   spectral.idempotency_residual});
            worst_herm = std::max({worst_herm, group.hermiticity_residual,
                                   spectral.hermiticity_residual});
        }
    });

    clock.time("first_class_checks", [&] {
        int nmax = sweep.back();
        SpacePtr space = FockSpace::total_quanta(2, nmax);
        OperatorMatrix l3 = OperatorMatrix::rotation_generator(space, 0, 1);
        OperatorMatrix n_total = OperatorMatrix::total_number(space);
        ConstraintSet cs = ConstraintSet::single(l3);
        FirstClassReport fc = check_closed_first_class(cs, n_total);
        closure_cc = fc.residual_cc;
        closure_ch = fc.residual_ch;

        Projector group = projector_group_average_u1(l3, 2 * nmax + 1);
        std::mt19937 rng(*cfg.seed);
        std::uniform_real_distribution<double> dist(-10.0, 10.0);
        std::vector<std::vector<double>> taus;
        for (int i = 0; i < 10; ++i) taus.push_back({dist(rng)});
        DiagnosticsReport diag = projector_diagnostics(group, &cs, taus);
        invariance = diag.invariance_residual;
    });

    report.checks.push_back(check_le("group_spectral_agreement", worst_agreement, 1e-12));
    report.checks.push_back(check_le("projector_rank_defect", worst_rank, 0.0));
    report.checks.push_back(check_le("projector_idempotency_residual", worst_idem, 1e-10));
    report.checks.push_back(check_le("projector_hermiticity_residual", worst_herm, 1e-10));
    report.checks.push_back(check_le("first_class_closure_cc", closure_cc, 1e-12));
    report.checks.push_back(check_le("first_class_closure_ch", closure_ch, 1e-12));
    report.checks.push_back(check_le("constraint_invariance_residual", invariance, 1e-10));
}

void run_example1(const RunConfig& cfg, RunReport& report, PhaseClock& clock) {
    std::vector<int> sweep = *cfg.cutoff_sweep;
    auto pairs = all_pairs(kernel_labels_two_mode(*cfg.label_scale));

    std::vector<double> errors;
    int final_rank = 0;
    clock.time("kernel_sweep", [&] {
        for (int nmax : sweep) {
            SpacePtr space = FockSpace::total_quanta(2, nmax);
            OperatorMatrix l3 = OperatorMatrix::rotation_generator(space, 0, 1);
            Projector e = projector_group_average_u1(l3, 2 * nmax + 1);
            KernelReport kr = example1_kernel_report(e.matrix, pairs);
            errors.push_back(kr.max_abs_error);
            final_rank = e.rank;
        }
    });

    double worst_increase = 0.0;
    for (std::size_t i = 1; i < errors.size(); ++i)
        worst_increase = std::max(worst_increase, errors[i] - errors[i - 1]);

    int nmax = sweep.back();
    report.checks.push_back(check_le("bessel_kernel_max_abs_error", errors.back(), 1e-8));
    report.checks.push_back(check_le("bessel_kernel_error_increase", worst_increase, 1e-12));
    report.checks.push_back(
        check_le("projector_rank_defect", std::abs(double(final_rank - (nmax / 2 + 1))), 0.0));
}

void run_example2(const RunConfig& cfg, RunReport& report, PhaseClock& clock) {
    const std::vector<int>& cut = *cfg.per_mode_cutoff;

    clock.time("gaussian_pair", [&] {
        SpacePtr mode_space = FockSpace::per_mode({cut[1]});
        Projector e2 = projector_gaussian_pair(mode_space, 0, *cfg.grid_points, 10.0);
        Matrix vacuum = Matrix::Zero(mode_space->dimension(), mode_space->dimension());
        vacuum(0, 0) = 1.0;
        report.checks.push_back(check_le(
            "gaussian_pair_projector_error",
            spectral_norm(Matrix(e2.matrix.entries() - vacuum)), 1e-6));
        report.checks.push_back(check_le("gaussian_pair_trace_error",
                                         std::abs(e2.matrix.trace().real() - 1.0), 1e-6));
        report.checks.push_back(
            check_le("gaussian_pair_idempotency_residual", e2.idempotency_residual, 1e-10));
    });

    clock.time("reduction_checks", [&] {
        SpacePtr full = FockSpace::per_mode(cut);
        // the Eq-40 closed form 1 ⊗ |0_2><0_2|, built exactly as the zero
        // eigenspace of the constrained mode's number operator
        Projector e =
            projector_group_average_u1(OperatorMatrix::number(full, 1), 2 * cut[1] + 1);

        // H = ½(P² + Q²) ⊗ (1 + R + S) on (dynamical) ⊗ (constrained)
        OperatorMatrix q0 = OperatorMatrix::position(full, 0);
        OperatorMatrix p0 = OperatorMatrix::momentum(full, 0);
        OperatorMatrix r1 = OperatorMatrix::momentum(full, 1);
        OperatorMatrix s1 = OperatorMatrix::position(full, 1);
        Matrix osc = 0.5 * (p0.entries() * p0.entries() + q0.entries() * q0.entries());
        Matrix coupling = Matrix::Identity(full->dimension(), full->dimension()) +
                          r1.entries() + s1.entries();
        OperatorMatrix h(full, osc * coupling);
        h.set_hermitian();

        double scale = *cfg.label_scale;
        std::vector<CoherentLabel> samples;
        for (int t = 0; t < 10; ++t) {
            double theta = 2.0 * kPi * t / 10.0;
            samples.push_back(CoherentLabel::make(
                {scale * 0.8 * std::sin(theta), scale * 0.5 * std::cos(2.0 * theta)},
                {scale * 0.8 * std::cos(theta), scale * 0.5 * std::sin(3.0 * theta)},
                Convention::canonical));
        }
        std::vector<CoherentLabel> grid;
        for (int t = 0; t < 3; ++t) {
            double theta = 2.0 * kPi * t / 3.0;
            grid.push_back(CoherentLabel::make(
                {scale * 0.6 * std::sin(theta), scale * 0.4 * std::cos(theta)},
                {scale * 0.6 * std::cos(theta), scale * 0.4 * std::sin(theta)},
                Convention::canonical));
        }
        SecondClassReport sc = example2_factorization(h, e, 1, samples, all_pairs(grid),
                                                      *cfg.total_time);
        report.checks.push_back(
            check_le("symbol_reduction_residual", sc.symbol_reduction_residual, 1e-10));
        report.checks.push_back(
            check_le("propagator_factorization_residual", sc.factorization_residual, 1e-8));
        report.checks.push_back(
            check_le("measure_normalization_error", sc.measure_normalization_error, 1e-6));

        // geometric one-form along the two canonical test paths
        std::vector<double> ts;
        for (int i = 0; i < 7; ++i) ts.push_back(0.1 + 1.9 * i / 6.0);
        LabelPath dynamical = [scale](double t) {
            return CoherentLabel::make({0.5 * scale * std::cos(t), 0.0},
                                       {0.5 * scale * std::sin(t), 0.0}, Convention::canonical);
        };
        LabelPath constrained = [scale](double t) {
            return CoherentLabel::make({0.3 * scale, 0.5 * scale * std::cos(t)},
                                       {0.4 * scale, 0.5 * scale * std::sin(t)},
                                       Convention::canonical);
        };
        OneFormCheck a = geometric_one_form_check(full, e, dynamical, ts, 1e-3);
        OneFormCheck b = geometric_one_form_check(full, e, constrained, ts, 1e-3);
        report.checks.push_back(check_le("one_form_dynamical_path_residual", a.max_abs_error, 1e-6));
        report.checks.push_back(
            check_le("one_form_constrained_path_residual", b.max_abs_error, 1e-6));
    });
}

void run_trotter(const RunConfig& cfg, RunReport& report, PhaseClock& clock) {
    ConvergenceStudy study = clock.time("convergence", [&] {
        int nmax = *cfg.total_quanta_cutoff;
        SpacePtr space = FockSpace::total_quanta(2, nmax);
        OperatorMatrix l3 = OperatorMatrix::rotation_generator(space, 0, 1);
        Projector e = projector_group_average_u1(l3, 2 * nmax + 1);
        OperatorMatrix q1 = OperatorMatrix::position(space, 0);
        return trotter_convergence_study(q1, e, *cfg.total_time, *cfg.slice_counts,
                                         trotter_labels(*cfg.label_scale));
    });

    double worst_ratio = 0.0;
    for (std::size_t i = 1; i < study.errors.size(); ++i)
        worst_ratio = std::max(worst_ratio,
                               study.errors[i] / std::max(study.errors[i - 1], 1e-300));

    report.checks.push_back(check_range("trotter_loglog_slope", study.loglog_slope, 0.9, 1.3));
    report.checks.push_back(check_ge("trotter_error_reduction", study.reduction_factor, 8.0));
    report.checks.push_back(check_le("trotter_step_error_ratio", worst_ratio, 1.05));
}

void run_gauge(const RunConfig& cfg, RunReport& report, PhaseClock& clock) {
    clock.time("gauge_schedules", [&] {
        int nmax = *cfg.total_quanta_cutoff;
        SpacePtr space = FockSpace::total_quanta(2, nmax);
        OperatorMatrix l3 = OperatorMatrix::rotation_generator(space, 0, 1);
        OperatorMatrix h = OperatorMatrix::total_number(space);
        Projector e = projector_group_average_u1(l3, 2 * nmax + 1);
        ConstraintSet cs = ConstraintSet::single(l3);

        std::mt19937 rng(*cfg.seed);
        std::uniform_real_distribution<double> dist(-*cfg.multiplier_bound,
                                                    *cfg.multiplier_bound);
        std::vector<Matrix> results;
        for (int s = 0; s < *cfg.schedule_count; ++s) {
            TrotterPlan plan =
                TrotterPlan::zero_multipliers(*cfg.total_time, *cfg.gauge_slices, 1);
            for (auto& lambda : plan.lambda_schedule) lambda[0] = dist(rng);
            results.push_back(evolve_with_multipliers(h, cs, e, plan).entries());
        }

        double pairwise = 0.0;
        for (std::size_t i = 0; i < results.size(); ++i)
            for (std::size_t j = i + 1; j < results.size(); ++j)
                pairwise = std::max(pairwise, spectral_norm(Matrix(results[i] - results[j])));

        Matrix free_projected =
            matrix_exponential(h, cplx(0.0, -*cfg.total_time)).entries() * e.matrix.entries();
        double vs_free = 0.0;
        for (const Matrix& r : results)
            vs_free = std::max(vs_free, spectral_norm(Matrix(r - free_projected)));

        report.checks.push_back(check_le("gauge_schedule_pairwise_difference", pairwise, 1e-12));
        report.checks.push_back(check_le("gauge_vs_projected_free_evolution", vs_free, 1e-12));
    });
}

void run_unity(const RunConfig& cfg, RunReport& report, PhaseClock& clock) {
    clock.time("unity_residuals", [&] {
        int nmax = 12;
        if (cfg.per_mode_cutoff && !cfg.per_mode_cutoff->empty()) nmax = cfg.per_mode_cutoff->front();
        SpacePtr space = FockSpace::per_mode({nmax});
        double base = unity_resolution_residual(space, *cfg.grid_box, *cfg.grid_points, nmax / 2);
        double refined =
            unity_resolution_residual(space, *cfg.grid_box, 2 * *cfg.grid_points, nmax / 2);
        report.checks.push_back(check_le("unity_residual_low_subspace", base, 1e-3));
        report.checks.push_back(
            check_le("unity_refinement_ratio", refined / std::max(base, 1e-300), 1.1));
    });

    clock.time("upper_symbols", [&] {
        SpacePtr space = FockSpace::per_mode({40});
        OperatorMatrix number = OperatorMatrix::number(space, 0);
        double symbol_err = 0.0;
        for (int a = -2; a <= 2; ++a) {
            for (int b = -2; b <= 2; ++b) {
                cplx z(0.7 * a, 0.7 * b);
                CoherentLabel label = CoherentLabel::from_z({z}, Convention::weyl);
                symbol_err = std::max(symbol_err,
                                      std::abs(upper_symbol(number, label) - std::norm(z)));
            }
        }
        report.checks.push_back(check_le("upper_symbol_number_error", symbol_err, 1e-10));

        OperatorMatrix q = OperatorMatrix::position(space, 0);
        cplx alpha(0.7, 0.0), beta(-1.3, 0.0);
        OperatorMatrix combo(space, alpha * number.entries() + beta * q.entries());
        double lin_err = 0.0;
        for (double pv : {-1.0, 0.3, 1.2}) {
            CoherentLabel label = CoherentLabel::make({pv}, {0.5 * pv + 0.2}, Convention::weyl);
            cplx lhs = upper_symbol(combo, label);
            cplx rhs = alpha * upper_symbol(number, label) + beta * upper_symbol(q, label);
            lin_err = std::max(lin_err, std::abs(lhs - rhs));
        }
        report.checks.push_back(check_le("upper_symbol_linearity_residual", lin_err, 1e-12));
    });
}

}  // namespace

const char* subcommand_name(Subcommand s) {
    switch (s) {
        case Subcommand::projector_suite: return "projector-suite";
        case Subcommand::example1: return "example1";
        case Subcommand::example2: return "example2";
        case Subcommand::trotter: return "trotter";
        case Subcommand::gauge: return "gauge";
        case Subcommand::unity: return "unity";
    }
    return "unknown";
}

std::optional<Subcommand> subcommand_from_name(const std::string& name) {
    for (Subcommand s : {Subcommand::projector_suite, Subcommand::example1, Subcommand::example2,
                         Subcommand::trotter, Subcommand::gauge, Subcommand::unity})
        if (name == subcommand_name(s)) return s;
    return std::nullopt;
}

void RunConfig::resolve() {
    auto positive = [](double v, const char* what) {
        require(v > 0.0, errc::invalid_argument, std::string(what) + " must be positive");
    };

    switch (subcommand) {
        case Subcommand::projector_suite:
            if (!cutoff_sweep) cutoff_sweep = std::vector<int>{4, 8, 12};
            break;
        case Subcommand::example1:
            if (per_mode_cutoff) {
                warnings.push_back(
                    "example1 requires the total_quanta scheme; ignoring per-mode cutoffs");
                per_mode_cutoff.reset();
            }
            if (!total_quanta_cutoff) total_quanta_cutoff = 40;
            if (!cutoff_sweep) {
                cutoff_sweep = std::vector<int>{10, 20, 30, 40};
                if (*total_quanta_cutoff != 40)
                    cutoff_sweep = std::vector<int>{*total_quanta_cutoff};
            }
            if (cutoff_sweep->back() != *total_quanta_cutoff)
                cutoff_sweep->push_back(*total_quanta_cutoff);
            break;
        case Subcommand::example2:
            if (!per_mode_cutoff) per_mode_cutoff = std::vector<int>{12, 12};
            require(per_mode_cutoff->size() == 2, errc::invalid_argument,
                    "example2 needs exactly two per-mode cutoffs");
            if (!grid_points) grid_points = 64;
            break;
        case Subcommand::trotter:
            if (!total_quanta_cutoff) total_quanta_cutoff = 20;
            if (!slice_counts) slice_counts = std::vector<int>{10, 20, 40, 80, 160};
            require(slice_counts->size() >= 2, errc::invalid_argument,
                    "trotter needs at least two slice counts");
            break;
        case Subcommand::gauge:
            if (!total_quanta_cutoff) total_quanta_cutoff = 8;
            if (!gauge_slices) gauge_slices = 100;
            if (!schedule_count) schedule_count = 5;
            if (!multiplier_bound) multiplier_bound = 5.0;
            break;
        case Subcommand::unity:
            if (!per_mode_cutoff) per_mode_cutoff = std::vector<int>{12};
            break;
    }

    if (!grid_box) grid_box = 6.0;
    if (!grid_points) grid_points = 64;
    if (!total_time) total_time = 1.0;
    if (!label_scale) label_scale = 1.0;
    if (!seed) seed = 42;
    if (!total_quanta_cutoff) total_quanta_cutoff = 40;
    if (!cutoff_sweep) cutoff_sweep = std::vector<int>{};
    if (!per_mode_cutoff) per_mode_cutoff = std::vector<int>{};
    if (!slice_counts) slice_counts = std::vector<int>{10, 20, 40, 80, 160};
    if (!gauge_slices) gauge_slices = 100;
    if (!schedule_count) schedule_count = 5;
    if (!multiplier_bound) multiplier_bound = 5.0;

    positive(*grid_box, "grid box");
    positive(*total_time, "total time");
    positive(*label_scale, "label scale");
    require(*grid_points >= 8, errc::invalid_argument, "grid needs at least 8 points per axis");
    require(*label_scale * 0.8 <= label_magnitude_guard, errc::guard_exceeded,
            "label scale pushes labels beyond the |z| guard");
    for (int n : *cutoff_sweep)
        require(n >= 1, errc::invalid_argument, "cutoffs must be positive");
    for (int n : *per_mode_cutoff)
        require(n >= 1, errc::invalid_argument, "cutoffs must be positive");
    for (int n : *slice_counts)
        require(n >= 1, errc::invalid_argument, "slice counts must be positive");
    require(*total_quanta_cutoff >= 1, errc::invalid_argument, "cutoff must be positive");
    require(*gauge_slices >= 1 && *schedule_count >= 1, errc::invalid_argument,
            "gauge run needs positive slice and schedule counts");
}

RunConfig config_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& ex) {
        fail(errc::invalid_argument, std::string("config parse error: ") + ex.what());
    }

    RunConfig cfg;
    require(j.contains("subcommand"), errc::invalid_argument, "config needs a subcommand");
    auto sub = subcommand_from_name(j.at("subcommand").get<std::string>());
    require(sub.has_value(), errc::invalid_argument, "unknown subcommand in config");
    cfg.subcommand = *sub;

    auto get_int = [&](const char* key, std::optional<int>& slot) {
        if (j.contains(key)) slot = j.at(key).get<int>();
    };
    auto get_double = [&](const char* key, std::optional<double>& slot) {
        if (j.contains(key)) slot = j.at(key).get<double>();
    };
    auto get_ints = [&](const char* key, std::optional<std::vector<int>>& slot) {
        if (j.contains(key)) slot = j.at(key).get<std::vector<int>>();
    };

    get_int("nmax", cfg.total_quanta_cutoff);
    get_ints("per_mode", cfg.per_mode_cutoff);
    get_ints("cutoff_sweep", cfg.cutoff_sweep);
    get_double("box", cfg.grid_box);
    get_int("points", cfg.grid_points);
    get_double("total_time", cfg.total_time);
    get_ints("slice_counts", cfg.slice_counts);
    get_int("gauge_slices", cfg.gauge_slices);
    get_int("schedules", cfg.schedule_count);
    get_double("multiplier_bound", cfg.multiplier_bound);
    get_double("label_scale", cfg.label_scale);
    if (j.contains("seed")) cfg.seed = j.at("seed").get<unsigned>();
    if (j.contains("output")) cfg.output_path = j.at("output").get<std::string>();
    if (j.contains("format")) {
        std::string f = j.at("format").get<std::string>();
        require(f == "json" || f == "csv", errc::invalid_argument, "format must be json or csv");
        cfg.format = f == "json" ? ReportFormat::json : ReportFormat::csv;
    }
    return cfg;
}

namespace {

ordered_json config_json(const RunConfig& cfg) {
    ordered_json j;
    j["subcommand"] = subcommand_name(cfg.subcommand);
    j["version"] = library_version();
    j["nmax"] = cfg.total_quanta_cutoff.value_or(0);
    j["per_mode"] = cfg.per_mode_cutoff.value_or(std::vector<int>{});
    j["cutoff_sweep"] = cfg.cutoff_sweep.value_or(std::vector<int>{});
    j["box"] = cfg.grid_box.value_or(0.0);
    j["points"] = cfg.grid_points.value_or(0);
    j["total_time"] = cfg.total_time.value_or(0.0);
    j["slice_counts"] = cfg.slice_counts.value_or(std::vector<int>{});
    j["gauge_slices"] = cfg.gauge_slices.value_or(0);
    j["schedules"] = cfg.schedule_count.value_or(0);
    j["multiplier_bound"] = cfg.multiplier_bound.value_or(0.0);
    j["label_scale"] = cfg.label_scale.value_or(1.0);
    j["seed"] = cfg.seed.value_or(42);
    j["format"] = cfg.format == ReportFormat::json ? "json" : "csv";
    j["output"] = cfg.output_path;
    j["warnings"] = cfg.warnings;
    return j;
}

}  // namespace

std::string config_to_json(const RunConfig& resolved) { return config_json(resolved).dump(2); }

const char* library_version() { return "0.1.0"; }

RunReport run_suite(RunConfig config) {
    config.resolve();

    RunReport report;
    report.config = config;
    PhaseClock clock(report.timings);

    switch (config.subcommand) {
        case Subcommand::projector_suite: run_projector_suite(config, report, clock); break;
        case Subcommand::example1: run_example1(config, report, clock); break;
        case Subcommand::example2: run_example2(config, report, clock); break;
        case Subcommand::trotter: run_trotter(config, report, clock); break;
        case Subcommand::gauge: run_gauge(config, report, clock); break;
        case Subcommand::unity: run_unity(config, report, clock); break;
    }

    report.all_passed = true;
    for (const Check& c : report.checks) report.all_passed = report.all_passed && c.pass;
    return report;
}

std::string report_to_json(const RunReport& report) {
    ordered_json j;
    j["config"] = config_json(report.config);
    j["checks"] = ordered_json::array();
    for (const Check& c : report.checks) {
        ordered_json jc;
        jc["name"] = c.name;
        jc["value"] = c.value;
        jc["tolerance"] = c.tolerance;
        if (c.cmp == Check::Cmp::range) jc["upper"] = c.upper;
        jc["pass"] = c.pass;
        j["checks"].push_back(std::move(jc));
    }
    j["timings"] = ordered_json::array();
    for (const PhaseTiming& t : report.timings) {
        ordered_json jt;
        jt["phase"] = t.phase;
        jt["seconds"] = t.seconds;
        j["timings"].push_back(std::move(jt));
    }
    return j.dump(2) + "\n";
}

namespace {

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string report_to_csv(const RunReport& report) {
    std::string out = "name,value,tolerance,pass\n";
    for (const Check& c : report.checks) {
        out += c.name;
        out += ',';
        out += format_value(c.value);
        out += ',';
        out += format_value(c.tolerance);
        out += ',';
        out += c.pass ? "true" : "false";
        out += '\n';
    }
    return out;
}

std::string report_json_to_csv(const std::string& report_json) {
    ordered_json j;
    try {
        j = ordered_json::parse(report_json);
    } catch (const std::exception& ex) {
        fail(errc::invalid_argument, std::string("report parse error: ") + ex.what());
    }
    require(j.contains("checks") && j.at("checks").is_array(), errc::invalid_argument,
            "report has no checks array");
    std::string out = "name,value,tolerance,pass\n";
    for (const auto& jc : j.at("checks")) {
        out += jc.at("name").get<std::string>();
        out += ',';
        out += format_value(jc.at("value").get<double>());
        out += ',';
        out += format_value(jc.at("tolerance").get<double>());
        out += ',';
        out += jc.at("pass").get<bool>() ? "true" : "false";
        out += '\n';
    }
    return out;
}

}  // namespace fockproj
