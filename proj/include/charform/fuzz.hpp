#pragma once

#include <cstdint>
#include <string>

#include "charform/checks.hpp"
#include "charform/report.hpp"

namespace charform {

struct FuzzConfig {
    unsigned degree_min = 2;
    unsigned degree_max = 6;
    unsigned trials = 100;
    std::uint64_t seed = 0;
    bool approx = false;
    long root_num_bound = 20;   // exact roots: numerators drawn from [-bound, bound]
    long root_den_bound = 10;   // exact roots: denominators drawn from [1, bound]
    double disk_radius = 2.0;   // approx roots drawn inside this disk
    unsigned permutation_cap = kDefaultPermutationCap;
    TolerancePolicy pol{};
};

/// Runs the full check battery on `trials` random root tuples. Random
/// draws use only integer operations on a fixed-seed engine, so an
/// identical config reproduces the identical trial sequence on any
/// platform.
VerificationReport run_fuzz(const FuzzConfig& cfg);

/// Canonical byte rendering of a fuzz run: config echo, records and
/// summary as JSON with a trailing newline. Two runs with the same
/// config must produce identical bytes; this string is that contract.
std::string fuzz_report_bytes(const FuzzConfig& cfg, const VerificationReport& report);

}  // namespace charform
