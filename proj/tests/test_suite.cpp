#include <doctest.h>

#include <nlohmann/json.hpp>

#include "suite.hpp"
#include "errors.hpp"

using namespace fockproj;
using nlohmann::json;

TEST_CASE("config parsing and defaults") {
    SUBCASE("example1 picks its cutoff and sweep") {
        RunConfig cfg = config_from_json(R"({"subcommand": "example1", "nmax": 30})");
        cfg.resolve();
        CHECK(*cfg.total_quanta_cutoff == 30);
        CHECK(cfg.cutoff_sweep->back() == 30);
        CHECK(cfg.format == ReportFormat::json);
    }

    SUBCASE("trotter slice list") {
        RunConfig cfg = config_from_json(
            R"({"subcommand": "trotter", "total_time": 2.0, "slice_counts": [10, 20, 40]})");
        cfg.resolve();
        CHECK(*cfg.total_time == 2.0);
        CHECK(cfg.slice_counts->size() == 3);
    }

    SUBCASE("example1 with per-mode cutoffs warns and switches scheme") {
        RunConfig cfg =
            config_from_json(R"({"subcommand": "example1", "per_mode": [10, 10], "nmax": 12})");
        cfg.resolve();
        CHECK(!cfg.warnings.empty());
        CHECK(!cfg.per_mode_cutoff.has_value());
        CHECK(*cfg.total_quanta_cutoff == 12);
    }

    SUBCASE("bad inputs are rejected") {
        CHECK_THROWS_AS(config_from_json("not json"), Error);
        CHECK_THROWS_AS(config_from_json(R"({"nmax": 4})"), Error);
        CHECK_THROWS_AS(config_from_json(R"({"subcommand": "frobnicate"})"), Error);
        RunConfig bad = config_from_json(R"({"subcommand": "unity", "points": 2})");
        CHECK_THROWS_AS(bad.resolve(), Error);
        RunConfig neg = config_from_json(R"({"subcommand": "unity", "box": -1.0})");
        CHECK_THROWS_AS(neg.resolve(), Error);
    }
}

TEST_CASE("unity suite runs and reports") {
    RunConfig cfg = config_from_json(
        R"({"subcommand": "unity", "per_mode": [8], "points": 24, "box": 5.5})");
    RunReport report = run_suite(cfg);

    CHECK(report.checks.size() == 4);
    CHECK(report.all_passed);
    for (const Check& c : report.checks) CHECK(c.pass);

    json j = json::parse(report_to_json(report));
    CHECK(j.contains("config"));
    CHECK(j.contains("checks"));
    CHECK(j.contains("timings"));
    CHECK(j["config"]["subcommand"] == "unity");
    CHECK(j["config"]["points"] == 24);
    CHECK(j["config"]["seed"] == 42);
    CHECK(j["config"]["version"] == library_version());
    CHECK(j["checks"].size() == report.checks.size());
    CHECK(j["timings"].size() >= 1);

    // every configured check appears exactly once
    std::set<std::string> names;
    for (const auto& jc : j["checks"]) names.insert(jc["name"].get<std::string>());
    CHECK(names.size() == report.checks.size());
}

TEST_CASE("report serialization is deterministic and convertible") {
    RunConfig cfg = config_from_json(R"({"subcommand": "unity", "per_mode": [6], "points": 16})");
    RunReport report = run_suite(cfg);

    std::string a = report_to_json(report);
    std::string b = report_to_json(report);
    CHECK(a == b);

    std::string csv = report_to_csv(report);
    CHECK(csv.rfind("name,value,tolerance,pass\n", 0) == 0);
    CHECK(report_json_to_csv(a) == csv);

    // empty check list still serializes
    RunReport empty;
    empty.config = cfg;
    std::string ej = report_to_json(empty);
    json parsed = json::parse(ej);
    CHECK(parsed["checks"].is_array());
    CHECK(parsed["checks"].empty());
    CHECK(report_to_csv(empty) == "name,value,tolerance,pass\n");
}

TEST_CASE("two runs of the same config produce identical checks") {
    RunConfig cfg = config_from_json(R"({"subcommand": "unity", "per_mode": [6], "points": 16})");
    RunReport first = run_suite(cfg);
    RunReport second = run_suite(cfg);
    CHECK(report_to_csv(first) == report_to_csv(second));
}

TEST_CASE("gauge suite passes with seeded schedules") {
    RunConfig cfg = config_from_json(
        R"({"subcommand": "gauge", "nmax": 4, "gauge_slices": 20, "schedules": 3})");
    RunReport report = run_suite(cfg);
    CHECK(report.all_passed);
    json j = json::parse(report_to_json(report));
    CHECK(j["config"]["seed"] == 42);
    CHECK(j["config"]["gauge_slices"] == 20);
}

TEST_CASE("projector suite passes on a small sweep") {
    RunConfig cfg =
        config_from_json(R"({"subcommand": "projector-suite", "cutoff_sweep": [2, 4]})");
    RunReport report = run_suite(cfg);
    CHECK(report.all_passed);
    bool saw_agreement = false;
    for (const Check& c : report.checks)
        if (c.name == "group_spectral_agreement") saw_agreement = true;
    CHECK(saw_agreement);
}
