#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "charform/poly.hpp"

namespace charform {

/// Completed-power representation of a degree-n polynomial f:
///
///   scale * f(x) = (slope*x + shift)^n - g_terms(x) + scale * tail(x)
///
/// where slope = n!*a_n and shift = (n-1)!*a_{n-1} (so slope*x + shift is
/// the (n-1)-th derivative of f), scale = n!^n * a_n^(n-1), tail collects
/// the a_i x^i for i <= n-2, and g_terms collects the binomial terms of
/// (slope*x + shift)^n of degree n-2 and below:
///
///   g_terms(x) = sum_{i=2..n} C(n,i) * shift^i * slope^(n-i) * x^(n-i).
///
/// g_terms and tail may be the zero polynomial.
struct RewriteParts {
    unsigned degree = 0;
    Rat slope;
    Rat shift;
    Rat scale;
    Polynomial<Rat> g_terms;
    Polynomial<Rat> tail;
};

namespace detail {

template <class T>
struct EquationParts {
    unsigned degree = 0;
    T slope, shift, scale;
    std::vector<T> g;     // ascending, degrees 0..n-2
    std::vector<T> tail;  // ascending, degrees 0..n-2
};

template <class T>
EquationParts<T> equation_parts(const Polynomial<T>& p) {
    const unsigned n = p.degree();
    if (n < 2) throw std::invalid_argument("equation_parts: degree must be >= 2");

    EquationParts<T> parts;
    parts.degree = n;
    const T a_n = p.coeff(n);
    parts.slope = scalar_from<T>(factorial(n)) * a_n;
    parts.shift = scalar_from<T>(factorial(n - 1)) * p.coeff(n - 1);

    // n!^n * a_n^(n-1) = n! * (n! * a_n)^(n-1)
    parts.scale = scalar_from<T>(factorial(n));
    for (unsigned i = 0; i + 1 < n; ++i) parts.scale = parts.scale * parts.slope;

    std::vector<T> slope_pow(n + 1, T(1));
    std::vector<T> shift_pow(n + 1, T(1));
    for (unsigned i = 1; i <= n; ++i) {
        slope_pow[i] = slope_pow[i - 1] * parts.slope;
        shift_pow[i] = shift_pow[i - 1] * parts.shift;
    }

    parts.g.assign(n - 1, T(0));
    for (unsigned i = 2; i <= n; ++i) {
        parts.g[n - i] = scalar_from<T>(binomial(n, i)) * shift_pow[i] * slope_pow[n - i];
    }
    parts.tail.assign(p.coeffs().begin(), p.coeffs().begin() + (n - 1));
    return parts;
}

template <class T>
T eval_ascending(const std::vector<T>& c, const T& x) {
    T acc = T(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace detail

/// Pre: exact mode, degree >= 2.
inline RewriteParts build_rewrite(const Polynomial<Rat>& p) {
    auto parts = detail::equation_parts<Rat>(p);
    RewriteParts out;
    out.degree = parts.degree;
    out.slope = parts.slope;
    out.shift = parts.shift;
    out.scale = parts.scale;
    out.g_terms = Polynomial<Rat>(std::move(parts.g));
    out.tail = Polynomial<Rat>(std::move(parts.tail));
    return out;
}

/// Coefficient-wise check of the completed-power identity:
///   (slope*x + shift)^n - g_terms + scale*tail == scale*p, exactly.
inline bool rewrite_holds(const RewriteParts& parts, const Polynomial<Rat>& p) {
    const Polynomial<Rat> linear({parts.shift, parts.slope});
    const Polynomial<Rat> lhs = linear.pow(parts.degree) - parts.g_terms + parts.scale * parts.tail;
    return lhs == parts.scale * p;
}

inline bool verify_rewrite(const Polynomial<Rat>& p) {
    return rewrite_holds(build_rewrite(p), p);
}

/// Residual of the root-form equation at x:
///   (slope*x + shift)^n - (g_terms(x) - scale*tail(x)).
/// Identically scale*f(x), so it vanishes exactly at the points where f
/// does. Exact in exact mode; in approximate mode compare against
/// root_equation_magnitude.
template <class T>
T root_equation_residual(const Polynomial<T>& p, const T& x) {
    const auto parts = detail::equation_parts<T>(p);
    T lin = parts.slope * x + parts.shift;
    T lifted = T(1);
    for (unsigned i = 0; i < parts.degree; ++i) lifted = lifted * lin;
    return lifted - detail::eval_ascending(parts.g, x) + parts.scale * detail::eval_ascending(parts.tail, x);
}

/// Magnitude of the terms combined in root_equation_residual, for
/// cancellation-aware zero tests in approximate mode.
inline double root_equation_magnitude(const Polynomial<Cplx>& p, const Cplx& x) {
    const auto parts = detail::equation_parts<Cplx>(p);
    const double ax = std::abs(x);
    double mag = std::pow(std::abs(parts.slope) * ax + std::abs(parts.shift), parts.degree);
    double xp = 1.0;
    for (std::size_t i = 0; i < parts.g.size(); ++i) {
        mag += std::abs(parts.g[i]) * xp + std::abs(parts.scale) * std::abs(parts.tail[i]) * xp;
        xp *= ax;
    }
    return mag;
}

/// One equation of the derivative chain: differentiating the root-form
/// equation `order` times and dividing out the common factor
/// (slope)^(exponent-1) * exponent! leaves a perfect power on the left,
///
///   (slope*x + shift)^exponent = rhs(x),
///
/// with exponent = n - order descending from n-1 down to 2.
struct DerivedEquation {
    unsigned order = 0;     // number of differentiations applied
    unsigned exponent = 0;  // n - order
    Rat slope;
    Rat shift;
    Polynomial<Rat> rhs;
};

/// The n-2 derived equations for order = 1..n-2 (empty for n = 2, where
/// the root-form equation is already quadratic and needs no
/// differentiation). The last entry coincides with
/// characteristic_equation.
inline std::vector<DerivedEquation> derivative_chain(const Polynomial<Rat>& p) {
    const unsigned n = p.degree();
    if (n < 2) throw std::invalid_argument("derivative_chain: degree must be >= 2");

    const Rat a_n = p.coeff(n);
    const Rat slope = factorial(n) * a_n;
    const Rat shift = factorial(n - 1) * p.coeff(n - 1);

    std::vector<DerivedEquation> chain;
    chain.reserve(n >= 2 ? n - 2 : 0);
    for (unsigned k = 1; k + 2 <= n; ++k) {
        const unsigned m = n - k;
        // common factor removed from both sides: m! * slope^(m-1)
        Rat c = factorial(m);
        for (unsigned i = 0; i + 1 < m; ++i) c *= slope;

        std::vector<Rat> rhs(m >= 1 ? m - 1 : 0, Rat(0));
        Rat shift_pow = shift * shift;
        for (unsigned i = 2; i <= m; ++i) {
            Rat slope_pow(1);
            for (unsigned t = 0; t < m - i; ++t) slope_pow *= slope;
            rhs[m - i] += binomial(m, i) * shift_pow * slope_pow;
            shift_pow *= shift;
        }
        for (unsigned i = k; i + 2 <= n; ++i) {
            // i-th tail coefficient differentiated k times: a_i * i!/(i-k)!
            Rat fall(1);
            for (unsigned t = 0; t < k; ++t) fall *= static_cast<long>(i - t);
            rhs[i - k] -= c * p.coeff(i) * fall;
        }
        chain.push_back({k, m, slope, shift, Polynomial<Rat>(std::move(rhs))});
    }
    return chain;
}

/// The quadratic endpoint of the chain, valid for every n >= 2:
///   (n!*a_n*x + (n-1)!*a_{n-1})^2 = rhs
/// with rhs = (n-1)!^2*a_{n-1}^2 - 2*n!*(n-2)!*a_n*a_{n-2}, the
/// characteristic discriminant.
template <class T>
struct CharacteristicEquation {
    T slope, shift, rhs;
};

template <class T>
CharacteristicEquation<T> characteristic_equation(const Polynomial<T>& p) {
    const unsigned n = p.degree();
    if (n < 2) throw std::invalid_argument("characteristic_equation: degree must be >= 2");
    const T a_n = p.coeff(n);
    const T a_n1 = p.coeff(n - 1);
    const T a_n2 = p.coeff(n - 2);
    CharacteristicEquation<T> eq;
    eq.slope = scalar_from<T>(factorial(n)) * a_n;
    eq.shift = scalar_from<T>(factorial(n - 1)) * a_n1;
    eq.rhs = scalar_from<T>(factorial(n - 1) * factorial(n - 1)) * a_n1 * a_n1 -
             scalar_from<T>(Rat(2) * factorial(n) * factorial(n - 2)) * a_n * a_n2;
    return eq;
}

}  // namespace charform
