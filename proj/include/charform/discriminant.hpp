#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "charform/poly.hpp"
#include "charform/rewrite.hpp"

namespace charform {

/// Characteristic discriminant of a degree-n polynomial:
///
///   D = (n-1)!^2 * a_{n-1}^2 - 2 * n! * (n-2)! * a_n * a_{n-2}
///
/// `prefactor` is (n-1)!*(n-2)!; D / (prefactor * a_n^2) is the
/// normalized value (1/a_n^2) * ((n-1)*a_{n-1}^2 - 2*n*a_n*a_{n-2}).
template <class T>
struct DiscriminantValue {
    T d;
    unsigned n = 0;
    Rat prefactor;
};

template <class T>
DiscriminantValue<T> discriminant(const Polynomial<T>& p) {
    const unsigned n = p.degree();
    if (n < 2) throw std::invalid_argument("discriminant: degree must be >= 2");
    DiscriminantValue<T> out;
    out.n = n;
    out.prefactor = factorial(n - 1) * factorial(n - 2);
    out.d = characteristic_equation(p).rhs;
    return out;
}

template <class T>
T normalized_value(const DiscriminantValue<T>& d, const T& leading) {
    return d.d / (scalar_from<T>(d.prefactor) * leading * leading);
}

/// Raised when exact candidate extraction needs sqrt(D) but D is not a
/// perfect square of a rational.
struct NonSquareError : std::domain_error {
    explicit NonSquareError(const std::string& what) : std::domain_error(what) {}
};

/// The two solutions of the characteristic equation,
///   x = (-(n-1)!*a_{n-1} +- sqrt(D)) / (n!*a_n),
/// returned as {plus-branch, minus-branch}. Exact overload requires D to
/// be a perfect square (else NonSquareError); complex overload always
/// succeeds. For D = 0 both entries coincide.
inline std::vector<Rat> candidate_solutions(const Polynomial<Rat>& p) {
    const auto eq = characteristic_equation(p);
    if (!is_perfect_square(eq.rhs))
        throw NonSquareError("candidate_solutions: discriminant is not a perfect square");
    const Rat root = rat_sqrt(eq.rhs);
    return {(-eq.shift + root) / eq.slope, (-eq.shift - root) / eq.slope};
}

inline std::vector<Cplx> candidate_solutions(const Polynomial<Cplx>& p) {
    const auto eq = characteristic_equation(p);
    const Cplx root = std::sqrt(eq.rhs);
    return {(-eq.shift + root) / eq.slope, (-eq.shift - root) / eq.slope};
}

}  // namespace charform
