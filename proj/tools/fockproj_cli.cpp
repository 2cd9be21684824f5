// Command-line front end for the fockproj shared library. Builds a JSON run
// configuration from flags (optionally seeded from --config), hands it to
// fockproj_run_suite, prints a per-check summary and writes the report file.
//
// Exit codes: 0 all checks passed, 1 at least one check failed,
//             2 usage or i/o error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fockproj/fockproj.h"

namespace {

using nlohmann::ordered_json;

constexpr int kExitUsage = 2;

struct Options {
    std::string config_path;
    std::string output_path;
    std::string format = "json";
    int nmax = -1;
    std::vector<int> per_mode;
    std::vector<int> cutoff_sweep;
    double box = -1.0;
    int points = -1;
    double total_time = -1.0;
    std::vector<int> slice_counts;
    int gauge_slices = -1;
    int schedules = -1;
    double multiplier_bound = -1.0;
    double label_scale = -1.0;
    long long seed = -1;
};

void add_common_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--config", opt.config_path, "JSON config file; flags override its values");
    cmd->add_option("-o,--output", opt.output_path, "report file path");
    cmd->add_option("--format", opt.format, "report format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--nmax", opt.nmax, "total-quanta cutoff");
    cmd->add_option("--per-mode", opt.per_mode, "per-mode cutoffs");
    cmd->add_option("--cutoff-sweep", opt.cutoff_sweep, "cutoffs for convergence sweeps");
    cmd->add_option("--box", opt.box, "phase-space box half-width");
    cmd->add_option("--points", opt.points, "grid points per axis");
    cmd->add_option("--T,--total-time", opt.total_time, "evolution time");
    cmd->add_option("--slices", opt.slice_counts, "slice counts for the trotter study");
    cmd->add_option("--gauge-slices", opt.gauge_slices, "lattice slices for the gauge run");
    cmd->add_option("--schedules", opt.schedules, "number of random multiplier schedules");
    cmd->add_option("--multiplier-bound", opt.multiplier_bound,
                    "multiplier schedules drawn uniform in [-bound, bound]");
    cmd->add_option("--label-scale", opt.label_scale, "scale applied to the coherent label sets");
    cmd->add_option("--seed", opt.seed, "seed for the randomized checks");
}

ordered_json config_from_options(const std::string& subcommand, const Options& opt) {
    ordered_json cfg = ordered_json::object();
    if (!opt.config_path.empty()) {
        std::ifstream in(opt.config_path);
        if (!in) {
            std::cerr << "fockproj: cannot open config file: " << opt.config_path << "\n";
            std::exit(kExitUsage);
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        try {
            cfg = ordered_json::parse(buffer.str());
        } catch (const std::exception& ex) {
            std::cerr << "fockproj: config parse error: " << ex.what() << "\n";
            std::exit(kExitUsage);
        }
    }

    cfg["subcommand"] = subcommand;  // the command line always wins
    if (opt.nmax >= 0) cfg["nmax"] = opt.nmax;
    if (!opt.per_mode.empty()) cfg["per_mode"] = opt.per_mode;
    if (!opt.cutoff_sweep.empty()) cfg["cutoff_sweep"] = opt.cutoff_sweep;
    if (opt.box > 0.0) cfg["box"] = opt.box;
    if (opt.points > 0) cfg["points"] = opt.points;
    if (opt.total_time > 0.0) cfg["total_time"] = opt.total_time;
    if (!opt.slice_counts.empty()) cfg["slice_counts"] = opt.slice_counts;
    if (opt.gauge_slices > 0) cfg["gauge_slices"] = opt.gauge_slices;
    if (opt.schedules > 0) cfg["schedules"] = opt.schedules;
    if (opt.multiplier_bound > 0.0) cfg["multiplier_bound"] = opt.multiplier_bound;
    if (opt.label_scale > 0.0) cfg["label_scale"] = opt.label_scale;
    if (opt.seed >= 0) cfg["seed"] = static_cast<unsigned>(opt.seed);
    if (!opt.output_path.empty()) cfg["output"] = opt.output_path;
    cfg["format"] = opt.format;
    return cfg;
}

std::string resolve_output_path(const std::string& configured) {
    std::string path = configured;
    if (path.empty()) return path;
    if (const char* dir = std::getenv("FOCKPROJ_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
        std::filesystem::path p(path);
        path = (std::filesystem::path(dir) / p.filename()).string();
    }
    return path;
}

int run(const std::string& subcommand, const Options& opt) {
    ordered_json cfg = config_from_options(subcommand, opt);

    char* report_json = nullptr;
    int32_t all_passed = 0;
    fockproj_status status = fockproj_run_suite(cfg.dump().c_str(), &report_json, &all_passed);
    if (status != FOCKPROJ_OK) {
        std::cerr << "fockproj: " << fockproj_status_string(status) << ": "
                  << fockproj_last_error() << "\n";
        return kExitUsage;
    }

    ordered_json report = ordered_json::parse(report_json);
    for (const auto& warning : report["config"]["warnings"])
        std::cerr << "fockproj: warning: " << warning.get<std::string>() << "\n";
    for (const auto& check : report["checks"]) {
        std::printf("[%s] %-38s value=%.6e tolerance=%.3e\n",
                    check["pass"].get<bool>() ? "PASS" : "FAIL",
                    check["name"].get<std::string>().c_str(), check["value"].get<double>(),
                    check["tolerance"].get<double>());
    }

    std::string output = resolve_output_path(report["config"]["output"].get<std::string>());
    if (!output.empty()) {
        std::string payload;
        if (report["config"]["format"].get<std::string>() == "csv") {
            char* csv = nullptr;
            status = fockproj_report_to_csv(report_json, &csv);
            if (status != FOCKPROJ_OK) {
                std::cerr << "fockproj: " << fockproj_last_error() << "\n";
                fockproj_string_free(report_json);
                return kExitUsage;
            }
            payload = csv;
            fockproj_string_free(csv);
        } else {
            payload = report_json;
        }
        std::ofstream out(output, std::ios::binary);
        if (!out || !(out << payload)) {
            std::cerr << "fockproj: cannot write report to " << output << "\n";
            fockproj_string_free(report_json);
            return kExitUsage;
        }
        std::cout << "report written to " << output << "\n";
    }

    fockproj_string_free(report_json);
    std::cout << (all_passed ? "all checks passed" : "some checks FAILED") << "\n";
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string("fockproj ") + fockproj_version() +
                 " — constraint projectors and projected coherent-state propagators "
                 "on truncated Fock spaces"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    struct SubcommandSpec {
        const char* name;
        const char* description;
    };
    const std::vector<SubcommandSpec> specs = {
        {"projector-suite",
         "group-average vs spectral projector equivalence, ranks, projector laws"},
        {"example1", "rotation-invariant kernel against its Bessel closed form"},
        {"example2", "second-class vacuum-pair projector, reduction and factorization checks"},
        {"trotter", "projected Trotter product convergence study"},
        {"gauge", "multiplier-schedule independence of the projected propagator"},
        {"unity", "coherent-state resolution of unity and upper-symbol checks"},
    };

    std::vector<Options> options(specs.size());
    std::vector<CLI::App*> commands;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        CLI::App* cmd = app.add_subcommand(specs[i].name, specs[i].description);
        add_common_flags(cmd, options[i]);
        commands.push_back(cmd);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    for (std::size_t i = 0; i < specs.size(); ++i)
        if (commands[i]->parsed()) return run(specs[i].name, options[i]);

    std::cerr << app.help() << "\n";
    return kExitUsage;
}
