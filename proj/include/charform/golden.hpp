#pragma once

#include <vector>

#include "charform/numeric.hpp"

namespace charform::golden {

/// Known-good reference tables for the low-degree cases (n = 2..8), used
/// as golden fixtures by the test suites and the golden-tables dump.
/// They were derived independently of the generator code: anything the
/// generators produce is checked against these values, never the other
/// way around.

std::vector<unsigned> degrees();  // {2,...,8}

/// Reference H_n, row-major.
std::vector<std::vector<long>> hmatrix_rows(unsigned n);

/// Integer constants of the degree-n quadratic equation
///   (slope_factor*a_n*x + shift_factor*a_{n-1})^2
///     = square_term*a_{n-1}^2 - cross_term*a_n*a_{n-2}.
struct EquationConstants {
    long slope_factor;   // n!
    long shift_factor;   // (n-1)!
    long square_term;    // (n-1)!^2
    long cross_term;     // 2 n! (n-2)!
};

EquationConstants equation_constants(unsigned n);

/// (n-1)!(n-2)! for n = 2..8.
long prefactor(unsigned n);

}  // namespace charform::golden
