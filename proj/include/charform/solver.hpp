#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "charform/poly.hpp"

namespace charform {

struct SolverConfig {
    unsigned max_iterations = 200;
    double residual_tol = 1e-12;  // relative: |f(r)| / sum_i |a_i||r|^i
    unsigned restart_count = 4;
};

struct RootResult {
    std::vector<Cplx> roots;        // values where f vanishes, sorted by (re, im)
    std::vector<double> residuals;  // relative residual per root
    bool cluster_relaxed = false;   // residual_tol was relaxed x100 near root clusters
};

/// Non-convergence after all restarts; carries the best attempt.
struct SolverError : std::runtime_error {
    SolverError(const std::string& what, RootResult best_attempt)
        : std::runtime_error(what), best(std::move(best_attempt)) {}
    RootResult best;
};

/// All n complex roots (with multiplicity) by simultaneous Aberth
/// iteration with Newton polishing. Zero roots are split off exactly
/// beforehand.
RootResult find_roots(const Polynomial<Cplx>& p, const SolverConfig& cfg = {});
RootResult find_roots(const Polynomial<Rat>& p, const SolverConfig& cfg = {});

/// Bridges solver output to the factored-form sign convention: tuple
/// entries are the negated roots, sorted by (re, im) for deterministic
/// permutation indexing.
RootTuple<Cplx> to_root_tuple(const std::vector<Cplx>& roots, const Cplx& leading);

}  // namespace charform
