#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "charform/numeric.hpp"

namespace charform {

/// Dense univariate polynomial with coefficients in ascending order:
/// coeff(i) is the x^i coefficient. One arithmetic mode per instance
/// (T = Rat exact, T = Cplx approximate); mixing modes is a type error.
///
/// Trailing zero coefficients are trimmed on construction, so leading()
/// is nonzero for every value except the zero polynomial, which is kept
/// as the single coefficient {0}. Framework operations that require a
/// proper degree-n polynomial (n >= 1 or n >= 2) check it explicitly.
template <class T>
class Polynomial {
public:
    Polynomial() : coeffs_{T(0)} {}

    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.push_back(T(0));
        trim();
    }

    unsigned degree() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == T(0); }
    const T& leading() const { return coeffs_.back(); }
    const std::vector<T>& coeffs() const { return coeffs_; }

    T coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }

    /// Horner evaluation; exact when T is exact.
    T evaluate(const T& x) const {
        T acc = T(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }

    /// k-th derivative. k may not exceed the degree: the result would be
    /// the zero polynomial, which has no leading coefficient.
    Polynomial derivative(unsigned k = 1) const {
        if (k == 0) return *this;
        if (k > degree() || is_zero()) {
            throw std::domain_error("derivative: order exceeds degree");
        }
        std::vector<T> d(coeffs_.size() - k);
        for (std::size_t i = 0; i < d.size(); ++i) {
            // (i+k)! / i! applied to the x^(i+k) coefficient
            T factor = T(1);
            for (unsigned m = 0; m < k; ++m) {
                factor = factor * T(static_cast<long>(i + k - m));
            }
            d[i] = coeffs_[i + k] * factor;
        }
        return Polynomial(std::move(d));
    }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<T> r(std::max(coeffs_.size(), o.coeffs_.size()), T(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
        return Polynomial(std::move(r));
    }

    Polynomial operator-() const {
        std::vector<T> r(coeffs_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = -coeffs_[i];
        return Polynomial(std::move(r));
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return Polynomial();
        std::vector<T> r(coeffs_.size() + o.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
                r[i + j] = r[i + j] + coeffs_[i] * o.coeffs_[j];
            }
        }
        return Polynomial(std::move(r));
    }

    friend Polynomial operator*(const T& s, const Polynomial& p) {
        std::vector<T> r(p.coeffs_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = s * p.coeffs_[i];
        return Polynomial(std::move(r));
    }

    Polynomial pow(unsigned e) const {
        Polynomial acc({T(1)});
        for (unsigned i = 0; i < e; ++i) acc = acc * *this;
        return acc;
    }

    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

private:
    void trim() {
        while (coeffs_.size() > 1 && coeffs_.back() == T(0)) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

/// Ordered root tuple in the factored-form sign convention: each entry r
/// contributes the factor (x + r), so the polynomial vanishes at -r.
template <class T>
struct RootTuple {
    std::vector<T> roots;
    T leading = T(1);

    unsigned degree() const { return static_cast<unsigned>(roots.size()); }
};

/// Exact expansion of leading * prod_i (x + r_i).
template <class T>
Polynomial<T> expand_factored(const RootTuple<T>& t) {
    if (t.roots.empty()) throw std::invalid_argument("expand_factored: empty root tuple");
    if (t.leading == T(0)) throw std::invalid_argument("expand_factored: zero leading coefficient");
    Polynomial<T> acc({t.leading});
    for (const T& r : t.roots) acc = acc * Polynomial<T>({r, T(1)});
    return acc;
}

/// The x^(n-1) coefficient of the expansion: leading * sum of the tuple.
template <class T>
T sum_coefficient(const RootTuple<T>& t) {
    if (t.roots.empty()) throw std::invalid_argument("sum_coefficient: empty root tuple");
    T s = T(0);
    for (const T& r : t.roots) s = s + r;
    return t.leading * s;
}

/// Explicit lossy bridge from exact to approximate mode.
inline Polynomial<Cplx> to_approx(const Polynomial<Rat>& p) {
    std::vector<Cplx> c;
    c.reserve(p.coeffs().size());
    for (const Rat& q : p.coeffs()) c.push_back(to_cplx(q));
    return Polynomial<Cplx>(std::move(c));
}

inline RootTuple<Cplx> to_approx(const RootTuple<Rat>& t) {
    RootTuple<Cplx> r;
    r.leading = to_cplx(t.leading);
    r.roots.reserve(t.roots.size());
    for (const Rat& q : t.roots) r.roots.push_back(to_cplx(q));
    return r;
}

}  // namespace charform
