#pragma once

#include <string>
#include <vector>

#include "charform/poly.hpp"
#include "charform/report.hpp"
#include "charform/rootspace.hpp"

namespace charform {

struct CheckOptions {
    TolerancePolicy pol{};
    unsigned permutation_cap = kDefaultPermutationCap;
};

/// Canonical input encodings feeding the record digests.
std::string digest_of(const Polynomial<Rat>& p);
std::string digest_of(const Polynomial<Cplx>& p);
std::string digest_of(const RootTuple<Rat>& t);
std::string digest_of(const RootTuple<Cplx>& t);

/// Checks computable from the coefficients alone:
///   eq2 - completed-power rewrite identity (coefficient-wise)
///   eq5 - quadratic endpoint of the derivative chain, plus candidate
///         membership where the candidates are representable
/// `digest` overrides the records' input digest (defaults to the
/// polynomial's own).
std::vector<CheckRecord> coefficient_checks(const Polynomial<Rat>& p, const CheckOptions& opt = {},
                                            std::string digest = {});
std::vector<CheckRecord> coefficient_checks(const Polynomial<Cplx>& p, const CheckOptions& opt = {},
                                            std::string digest = {});

/// Checks that need the root tuple:
///   eq4  - root-form residual vanishes at every (negated) tuple entry
///   eq11 - discriminant equals the prefactored quadratic form
///   eq12 - normalized discriminant equals the bare quadratic form
///   eq17 - offset sums over the n! permutation family vanish
///   eq18 - pairwise offset-product sums hit their discriminant targets
/// eq17/eq18 are skipped when the tuple exceeds the permutation cap.
std::vector<CheckRecord> tuple_checks(const RootTuple<Rat>& t, const CheckOptions& opt = {},
                                      std::string digest = {});
std::vector<CheckRecord> tuple_checks(const RootTuple<Cplx>& t, const CheckOptions& opt = {},
                                      std::string digest = {});

/// coefficient_checks + tuple_checks on the tuple's expansion, all under
/// the tuple's digest; the fuzz harness battery.
std::vector<CheckRecord> full_battery(const RootTuple<Rat>& t, const CheckOptions& opt = {});
std::vector<CheckRecord> full_battery(const RootTuple<Cplx>& t, const CheckOptions& opt = {});

}  // namespace charform
