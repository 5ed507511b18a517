#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace charform {

// Exact rational scalar. mpq_class maintains the canonical reduced form
// (positive denominator, gcd(|numerator|, denominator) = 1) across all
// arithmetic, so exactness invariants hold by construction.
using Rat = mpq_class;
using Int = mpz_class;

// Approximate scalar: complex double. Real values carry a zero imaginary
// part.
using Cplx = std::complex<double>;

/// Policy for every approximate comparison in the library:
/// approx_eq(a, b) <=> |a - b| <= max(abs_floor, rel_tol * max(|a|, |b|)).
struct TolerancePolicy {
    double rel_tol = 1e-9;
    double abs_floor = 1e-12;
};

/// k! as an exact rational.
Rat factorial(unsigned long k);

/// C(n, i) exactly. Throws std::invalid_argument if i > n.
Rat binomial(unsigned long n, unsigned long i);

bool is_finite(const Cplx& v);

/// Throws std::invalid_argument naming `context` if v has a NaN or
/// infinite component.
void ensure_finite(const Cplx& v, const char* context);

/// Tolerance comparison on the complex modulus of a - b. Inputs must be
/// finite.
bool approx_eq(const Cplx& a, const Cplx& b, const TolerancePolicy& pol = {});

/// Zero test against an explicit magnitude: |v| <= max(abs_floor,
/// rel_tol * magnitude). Used where a sum cancels to zero and the natural
/// scale is the size of the cancelled terms, not the result.
bool approx_zero(const Cplx& v, double magnitude, const TolerancePolicy& pol = {});

/// Parses "p" or "p/q" with decimal integers and an optional leading
/// minus on p. Throws std::invalid_argument on malformed input or q = 0.
Rat parse_rat(const std::string& text);

/// Canonical text form, "p" or "p/q".
std::string rat_str(const Rat& q);

bool is_integer(const Rat& q);

/// True iff q is the square of a rational.
bool is_perfect_square(const Rat& q);

/// Exact nonnegative square root. Pre: is_perfect_square(q).
Rat rat_sqrt(const Rat& q);

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline double to_double(const Rat& q) { return q.get_d(); }

/// Lossy conversion used by every exact -> approx bridge.
inline Cplx to_cplx(const Rat& q) { return {q.get_d(), 0.0}; }

template <class T>
T scalar_from(const Rat& q);
template <>
inline Rat scalar_from<Rat>(const Rat& q) {
    return q;
}
template <>
inline Cplx scalar_from<Cplx>(const Rat& q) {
    return to_cplx(q);
}

/// Shortest text form of v that parses back to the same double.
std::string format_double(double v);

/// Report string for a scalar: exact "p/q"; approx "re" or "re:im".
std::string scalar_str(const Rat& q);
std::string scalar_str(const Cplx& v);

}  // namespace charform
