#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "charform/fuzz.hpp"

using namespace charform;

TEST_CASE("identical configs give byte-identical reports") {
    FuzzConfig cfg;
    cfg.trials = 12;
    cfg.seed = 42;
    const auto a = run_fuzz(cfg);
    const auto b = run_fuzz(cfg);
    CHECK(fuzz_report_bytes(cfg, a) == fuzz_report_bytes(cfg, b));
}

TEST_CASE("the seed changes the trial sequence") {
    FuzzConfig cfg;
    cfg.trials = 8;
    cfg.seed = 1;
    FuzzConfig other = cfg;
    other.seed = 2;
    CHECK(fuzz_report_bytes(cfg, run_fuzz(cfg)) != fuzz_report_bytes(other, run_fuzz(other)));
}

TEST_CASE("every trial passes in exact mode") {
    FuzzConfig cfg;
    cfg.trials = 30;
    cfg.seed = 7;
    const auto report = run_fuzz(cfg);
    CHECK(report.all_pass());
    // 7 checks per trial while every degree fits under the permutation cap
    CHECK(report.records.size() == 7 * cfg.trials);
    for (const auto& r : report.records) {
        CHECK(r.degree >= cfg.degree_min);
        CHECK(r.degree <= cfg.degree_max);
    }
}

TEST_CASE("every trial passes in approximate mode") {
    FuzzConfig cfg;
    cfg.trials = 20;
    cfg.seed = 9;
    cfg.approx = true;
    const auto report = run_fuzz(cfg);
    for (const auto& r : report.records) {
        CAPTURE(r.check);
        CAPTURE(r.degree);
        CAPTURE(r.delta);
        CHECK(r.pass);
    }
}

TEST_CASE("degrees above the cap still run the per-tuple checks") {
    FuzzConfig cfg;
    cfg.trials = 6;
    cfg.seed = 3;
    cfg.degree_min = 9;  // above the default permutation cap
    cfg.degree_max = 9;
    const auto report = run_fuzz(cfg);
    CHECK(report.all_pass());
    CHECK(report.records.size() == 5 * cfg.trials);  // eq17/eq18 skipped
}

TEST_CASE("report bytes carry the config echo") {
    FuzzConfig cfg;
    cfg.trials = 2;
    cfg.seed = 5;
    const auto report = run_fuzz(cfg);
    const auto j = nlohmann::json::parse(fuzz_report_bytes(cfg, report));
    CHECK(j["config"]["mode"] == "exact");
    CHECK(j["config"]["seed"] == 5);
    CHECK(j["config"]["trials"] == 2);
    CHECK(j["config"]["degrees"][0] == 2);
    CHECK(j["config"]["degrees"][1] == 6);
    CHECK(j["summary"]["total"] == report.records.size());
}

TEST_CASE("invalid configurations are rejected") {
    FuzzConfig cfg;
    cfg.degree_min = 1;
    CHECK_THROWS_AS(run_fuzz(cfg), std::invalid_argument);
    cfg.degree_min = 5;
    cfg.degree_max = 3;
    CHECK_THROWS_AS(run_fuzz(cfg), std::invalid_argument);
    cfg = FuzzConfig{};
    cfg.root_den_bound = 0;
    CHECK_THROWS_AS(run_fuzz(cfg), std::invalid_argument);
}
