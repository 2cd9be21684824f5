#ifndef FOCKPROJ_CORE_SUITE_HPP
#define FOCKPROJ_CORE_SUITE_HPP

#include <optional>
#include <string>
#include <vector>

namespace fockproj {

enum class Subcommand { projector_suite, example1, example2, trotter, gauge, unity };

enum class ReportFormat { json, csv };

const char* subcommand_name(Subcommand s);
std::optional<Subcommand> subcommand_from_name(const std::string& name);

/*
 * One run configuration. Unset optionals are filled with per-subcommand
 * defaults by resolve(); the resolved copy is what executes and what the
 * report echoes.
 */
struct RunConfig {
    Subcommand subcommand = Subcommand::unity;

    std::optional<int> total_quanta_cutoff;        // two-mode N_max
    std::optional<std::vector<int>> per_mode_cutoff;
    std::optional<std::vector<int>> cutoff_sweep;  // example1 convergence curve
    std::optional<double> grid_box;
    std::optional<int> grid_points;
    std::optional<double> total_time;
    std::optional<std::vector<int>> slice_counts;
    std::optional<int> gauge_slices;
    std::optional<int> schedule_count;
    std::optional<double> multiplier_bound;
    std::optional<double> label_scale;
    std::optional<unsigned> seed;

    std::string output_path;  // empty: no file emitted
    ReportFormat format = ReportFormat::json;

    // filled by resolve(); e.g. a per-mode cutoff handed to example1
    std::vector<std::string> warnings;

    void resolve();  // fills defaults, validates, may append warnings
};

RunConfig config_from_json(const std::string& text);
std::string config_to_json(const RunConfig& resolved);

struct Check {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    // pass criterion: value <= tolerance, value >= tolerance, or
    // tolerance <= value <= upper
    enum class Cmp { le, ge, range } cmp = Cmp::le;
    double upper = 0.0;  // range only
    bool pass = false;
};

struct PhaseTiming {
    std::string phase;
    double seconds = 0.0;
};

struct RunReport {
    RunConfig config;  // resolved
    std::vector<Check> checks;
    std::vector<PhaseTiming> timings;
    bool all_passed = false;
};

const char* library_version();

// Executes the checks mapped to the configured subcommand. The config is
// resolved first if needed. Throws on configuration errors.
RunReport run_suite(RunConfig config);

// Deterministic serializations: identical reports give identical bytes.
std::string report_to_json(const RunReport& report);
std::string report_to_csv(const RunReport& report);
std::string report_json_to_csv(const std::string& report_json);

}  // namespace fockproj

#endif
