#include "charform/fuzz.hpp"

#include <json.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace charform {

namespace {

// Integer draw in [0, k): modulo keeps the stream identical across
// platforms, unlike std::uniform_int_distribution.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t k) { return rng() % k; }

RootTuple<Rat> random_exact_tuple(std::mt19937_64& rng, unsigned n, const FuzzConfig& cfg) {
    RootTuple<Rat> t;
    t.roots.reserve(n);
    for (unsigned i = 0; i < n; ++i) {
        const long num = static_cast<long>(draw(rng, 2 * cfg.root_num_bound + 1)) - cfg.root_num_bound;
        const long den = 1 + static_cast<long>(draw(rng, cfg.root_den_bound));
        Rat r(num, den);
        r.canonicalize();
        t.roots.push_back(std::move(r));
    }
    // one draw per statement: argument evaluation order must not touch the stream
    const long mag = 1 + static_cast<long>(draw(rng, 4));
    const bool negative = draw(rng, 2) == 1;
    const long lead_den = 1 + static_cast<long>(draw(rng, 2));
    t.leading = Rat(negative ? -mag : mag, lead_den);
    t.leading.canonicalize();
    return t;
}

RootTuple<Cplx> random_approx_tuple(std::mt19937_64& rng, unsigned n, const FuzzConfig& cfg) {
    RootTuple<Cplx> t;
    t.roots.reserve(n);
    for (unsigned i = 0; i < n; ++i) {
        const double radius = cfg.disk_radius * static_cast<double>(draw(rng, 10001)) / 10000.0;
        const double angle =
            2.0 * std::numbers::pi * static_cast<double>(draw(rng, 360000)) / 360000.0;
        t.roots.push_back(std::polar(radius, angle));
    }
    const double mag = static_cast<double>(1 + draw(rng, 8)) / 4.0;
    const bool negative = draw(rng, 2) == 1;
    t.leading = Cplx(negative ? -mag : mag, 0.0);
    return t;
}

}  // namespace

VerificationReport run_fuzz(const FuzzConfig& cfg) {
    if (cfg.degree_min < 2 || cfg.degree_max < cfg.degree_min)
        throw std::invalid_argument("fuzz: degree range must satisfy 2 <= min <= max");
    if (cfg.root_num_bound < 1 || cfg.root_den_bound < 1 || cfg.disk_radius <= 0.0)
        throw std::invalid_argument("fuzz: root bounds must be positive");

    std::mt19937_64 rng(cfg.seed);
    const CheckOptions opt{cfg.pol, cfg.permutation_cap};

    VerificationReport report;
    for (unsigned trial = 0; trial < cfg.trials; ++trial) {
        const unsigned n =
            cfg.degree_min + static_cast<unsigned>(draw(rng, cfg.degree_max - cfg.degree_min + 1));
        std::vector<CheckRecord> records;
        if (cfg.approx) {
            records = full_battery(random_approx_tuple(rng, n, cfg), opt);
        } else {
            records = full_battery(random_exact_tuple(rng, n, cfg), opt);
        }
        report.records.insert(report.records.end(), std::make_move_iterator(records.begin()),
                              std::make_move_iterator(records.end()));
    }
    return report;
}

std::string fuzz_report_bytes(const FuzzConfig& cfg, const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["config"] = {{"mode", cfg.approx ? "approx" : "exact"},
                   {"degrees", {cfg.degree_min, cfg.degree_max}},
                   {"trials", cfg.trials},
                   {"seed", cfg.seed},
                   {"root_num_bound", cfg.root_num_bound},
                   {"root_den_bound", cfg.root_den_bound},
                   {"disk_radius", cfg.disk_radius},
                   {"permutation_cap", cfg.permutation_cap},
                   {"rel_tol", cfg.pol.rel_tol},
                   {"abs_floor", cfg.pol.abs_floor}};
    j["records"] = nlohmann::ordered_json::array();
    for (const CheckRecord& r : report.records) {
        j["records"].push_back({{"check", r.check},
                                {"degree", r.degree},
                                {"digest", r.digest},
                                {"pass", r.pass},
                                {"lhs", r.lhs},
                                {"rhs", r.rhs},
                                {"delta", r.delta}});
    }
    j["summary"] = {{"total", report.records.size()},
                    {"passed", report.passed()},
                    {"failed", report.failed()}};
    return j.dump(2) + "\n";
}

}  // namespace charform
