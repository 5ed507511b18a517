#pragma once

#include <stdexcept>
#include <vector>

#include "charform/discriminant.hpp"
#include "charform/numeric.hpp"
#include "charform/rootspace.hpp"

namespace charform {

/// Symmetric (n-1)x(n-1) integer matrix H_n relating the characteristic
/// discriminant to the quadratic form in the root offsets:
///   D = (n-1)!(n-2)! * a_n^2 * b^T H_n b.
class HMatrix {
public:
    HMatrix(unsigned n, std::vector<Int> entries) : n_(n), entries_(std::move(entries)) {}

    unsigned n() const { return n_; }
    unsigned size() const { return n_ - 1; }

    // 0-based access
    const Int& at(unsigned i, unsigned j) const { return entries_[i * size() + j]; }

    std::vector<std::vector<Int>> rows() const;

    bool operator==(const HMatrix&) const = default;

private:
    unsigned n_;
    std::vector<Int> entries_;  // row-major
};

/// Builds H_n from its closed-form generator; every entry is evaluated in
/// exact rationals and must land on an integer (a non-integer indicates a
/// broken generator and throws std::logic_error).
HMatrix build_hmatrix(unsigned n);

/// Diagonal entry h_ii (1-based i, 1 <= i <= n-1) from the standalone
/// quartic formula, independent of build_hmatrix.
Int diagonal_entry(unsigned n, unsigned i);

/// Floating-point evaluation of the factored form of the diagonal
/// quartic; agrees with diagonal_entry up to rounding.
double diagonal_factored(unsigned n, unsigned i);

/// (n-1)! * (n-2)!
Rat hmatrix_prefactor(unsigned n);

template <class T>
T quadratic_form(const HMatrix& h, const std::vector<T>& b) {
    if (b.size() != h.size()) throw std::invalid_argument("quadratic_form: dimension mismatch");
    T acc = T(0);
    for (unsigned i = 0; i < h.size(); ++i)
        for (unsigned j = 0; j < h.size(); ++j)
            acc = acc + scalar_from<T>(Rat(h.at(i, j))) * b[i] * b[j];
    return acc;
}

template <class T>
T quadratic_form(const HMatrix& h, const CharacteristicSet<T>& set) {
    return quadratic_form(h, set.b);
}

template <class T>
struct IdentityReport {
    T direct;    // discriminant from the coefficients
    T via_form;  // (n-1)!(n-2)! a_n^2 b^T H b
    T delta;
    bool pass = false;
};

/// Compares the coefficient-side discriminant against the quadratic-form
/// side for one offset set of p's root tuple.
template <class T>
IdentityReport<T> verify_identity(const Polynomial<T>& p, const CharacteristicSet<T>& set,
                                  const TolerancePolicy& pol = {}) {
    const unsigned n = p.degree();
    if (set.degree() != n) throw std::invalid_argument("verify_identity: degree mismatch");

    IdentityReport<T> rep;
    rep.direct = discriminant(p).d;
    const T a_n = p.coeff(n);
    rep.via_form = scalar_from<T>(hmatrix_prefactor(n)) * a_n * a_n * quadratic_form(build_hmatrix(n), set);
    rep.delta = rep.direct - rep.via_form;
    if constexpr (std::is_same_v<T, Cplx>) {
        rep.pass = approx_eq(rep.direct, rep.via_form, pol);
    } else {
        rep.pass = rep.direct == rep.via_form;
    }
    return rep;
}

}  // namespace charform
