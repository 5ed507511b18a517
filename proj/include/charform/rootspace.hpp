#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "charform/discriminant.hpp"
#include "charform/poly.hpp"

namespace charform {

/// Difference-space view of an ordered root tuple: the reference entry
/// x_1 plus n-1 offsets b_i defined by the recursion
///   x_i = x_{i-1} + sum_{j=1..i-1} b_j,
/// i.e. b_1 is the first difference x_2 - x_1 and b_i (i >= 2) the second
/// difference x_{i+1} - 2x_i + x_{i-1}.
template <class T>
struct CharacteristicSet {
    T reference;
    std::vector<T> b;

    unsigned degree() const { return static_cast<unsigned>(b.size()) + 1; }

    bool operator==(const CharacteristicSet&) const = default;
};

/// 0-based index order applied to a tuple's entries.
using Permutation = std::vector<unsigned>;

inline constexpr unsigned kDefaultPermutationCap = 8;

namespace detail {

inline void check_permutation(const Permutation& order, std::size_t n) {
    if (order.size() != n)
        throw std::invalid_argument("permutation size does not match tuple");
    std::vector<bool> seen(n, false);
    for (unsigned idx : order) {
        if (idx >= n || seen[idx])
            throw std::invalid_argument("not a permutation of tuple indices");
        seen[idx] = true;
    }
}

}  // namespace detail

template <class T>
CharacteristicSet<T> roots_to_characteristic(const RootTuple<T>& t, const Permutation& order) {
    const std::size_t n = t.roots.size();
    if (n < 2) throw std::invalid_argument("roots_to_characteristic: need at least 2 roots");
    detail::check_permutation(order, n);

    std::vector<T> y;
    y.reserve(n);
    for (unsigned idx : order) y.push_back(t.roots[idx]);

    CharacteristicSet<T> out;
    out.reference = y[0];
    out.b.reserve(n - 1);
    out.b.push_back(y[1] - y[0]);
    for (std::size_t i = 2; i < n; ++i) out.b.push_back(y[i] - y[i - 1] - (y[i - 1] - y[i - 2]));
    return out;
}

template <class T>
CharacteristicSet<T> roots_to_characteristic(const RootTuple<T>& t) {
    Permutation id(t.roots.size());
    std::iota(id.begin(), id.end(), 0u);
    return roots_to_characteristic(t, id);
}

/// Inverse recursion; the result is monic (leading 1) since the offsets
/// carry no leading-coefficient information.
template <class T>
RootTuple<T> characteristic_to_roots(const CharacteristicSet<T>& c) {
    RootTuple<T> t;
    t.leading = T(1);
    t.roots.reserve(c.b.size() + 1);
    t.roots.push_back(c.reference);
    T step = T(0);
    for (const T& bi : c.b) {
        step = step + bi;
        t.roots.push_back(t.roots.back() + step);
    }
    return t;
}

/// Recovers the reference entry from the x^(n-1) coefficient and the
/// offsets:  x_1 = (1/n) (a_{n-1} - sum_i ((n-i)^2 + (n-i))/2 * b_i).
/// Assumes the monic convention a_{n-1} = sum of tuple entries; for a
/// general leading coefficient pass a_{n-1}/a_n.
template <class T>
T reference_root(const T& a_n_minus_1, const std::vector<T>& b, unsigned n) {
    if (b.size() + 1 != n) throw std::invalid_argument("reference_root: |b| must be n-1");
    T acc = a_n_minus_1;
    for (std::size_t i = 0; i < b.size(); ++i) {
        const unsigned long m = n - (i + 1);  // triangular weight (m^2 + m)/2
        acc = acc - scalar_from<T>(Rat(static_cast<long>(m * (m + 1) / 2))) * b[i];
    }
    return acc / scalar_from<T>(Rat(static_cast<long>(n)));
}

/// All n! difference-space views of one tuple, in lexicographic order of
/// the index permutations; orders[s] produced sets[s].
template <class T>
struct PermutationFamily {
    RootTuple<T> source;
    std::vector<Permutation> orders;
    std::vector<CharacteristicSet<T>> sets;

    unsigned degree() const { return static_cast<unsigned>(source.roots.size()); }
};

template <class T>
PermutationFamily<T> enumerate_sets(const RootTuple<T>& t, unsigned cap = kDefaultPermutationCap) {
    const std::size_t n = t.roots.size();
    if (n < 2) throw std::invalid_argument("enumerate_sets: need at least 2 roots");
    if (n > cap)
        throw std::invalid_argument("enumerate_sets: tuple size " + std::to_string(n) +
                                    " exceeds permutation cap " + std::to_string(cap) +
                                    " (raise the cap to proceed; n! sets will be materialized)");

    PermutationFamily<T> fam;
    fam.source = t;
    Permutation order(n);
    std::iota(order.begin(), order.end(), 0u);
    do {
        fam.orders.push_back(order);
        fam.sets.push_back(roots_to_characteristic(t, order));
    } while (std::next_permutation(order.begin(), order.end()));
    return fam;
}

/// Organized-sequence predicate: for every i = 2..n the partial sum of
/// the (i-1)-th offset over the first i sets of `seq` vanishes. The
/// ordering of `seq` is the caller's: the predicate is evaluated, not
/// searched for.
template <class T>
bool organized_check(const std::vector<CharacteristicSet<T>>& seq,
                     const TolerancePolicy& pol = {}) {
    if (seq.empty()) throw std::out_of_range("organized_check: empty sequence");
    const unsigned n = seq[0].degree();
    if (seq.size() < n) throw std::out_of_range("organized_check: sequence shorter than degree");

    for (unsigned i = 2; i <= n; ++i) {
        T acc = T(0);
        double mag = 0.0;
        for (unsigned s = 0; s < i; ++s) {
            const T& v = seq[s].b.at(i - 2);
            acc = acc + v;
            if constexpr (std::is_same_v<T, Cplx>) mag += std::abs(v);
        }
        if constexpr (std::is_same_v<T, Cplx>) {
            if (!approx_zero(acc, mag, pol)) return false;
        } else {
            if (acc != T(0)) return false;
        }
    }
    return true;
}

/// Component-wise sums sum_s b_is over the whole family (claimed to be
/// identically zero).
template <class T>
std::vector<T> sum_property(const PermutationFamily<T>& fam) {
    const unsigned n = fam.degree();
    std::vector<T> sums(n - 1, T(0));
    for (const auto& set : fam.sets)
        for (unsigned i = 0; i + 1 < n; ++i) sums[i] = sums[i] + set.b[i];
    return sums;
}

/// Classification of an index pair (i,j), 1-based, i < j, by which
/// product-sum relation it participates in.
enum class PairKind {
    lead_pair,  // (1,2):              sum = -3 D / (n-1)!
    gap_two,    // (k, k+2):           sum =    D / (n-1)!
    adjacent,   // (k, k+1), k >= 2:   sum = -4 D / (n-1)!
    unrelated,  // gap >= 3:           sum = 0
};

inline PairKind classify_pair(unsigned i, unsigned j) {
    if (i == 1 && j == 2) return PairKind::lead_pair;
    if (j == i + 2) return PairKind::gap_two;
    if (j == i + 1) return PairKind::adjacent;
    return PairKind::unrelated;
}

template <class T>
struct PairProductEntry {
    unsigned i = 0, j = 0;  // 1-based offset indices, i < j
    PairKind kind = PairKind::unrelated;
    T sum;       // sum_s b_is b_js over the family
    T target;    // value demanded by the relation
    T delta;     // sum - target
    double ratio = 1.0;  // sum/target when target != 0 (discrepancy factor)
    bool pass = false;
};

template <class T>
struct ProductReport {
    std::vector<PairProductEntry<T>> entries;
    bool pass = true;
};

/// Evaluates every pairwise product sum of the family against the
/// relation targets. The relations assume the monic normalization, so D
/// is divided by leading^2 before use.
template <class T>
ProductReport<T> product_relations(const PermutationFamily<T>& fam, const DiscriminantValue<T>& d,
                                   const TolerancePolicy& pol = {}) {
    const unsigned n = fam.degree();
    const T lead = fam.source.leading;
    const T d_monic = d.d / (lead * lead);
    const T fac = scalar_from<T>(factorial(n - 1));

    ProductReport<T> report;
    for (unsigned i = 1; i + 1 <= n - 1; ++i) {
        for (unsigned j = i + 1; j <= n - 1; ++j) {
            PairProductEntry<T> e;
            e.i = i;
            e.j = j;
            e.kind = classify_pair(i, j);

            double mag = 0.0;
            e.sum = T(0);
            for (const auto& set : fam.sets) {
                const T term = set.b[i - 1] * set.b[j - 1];
                e.sum = e.sum + term;
                if constexpr (std::is_same_v<T, Cplx>) mag += std::abs(term);
            }

            switch (e.kind) {
                case PairKind::lead_pair: e.target = scalar_from<T>(Rat(-3)) * d_monic / fac; break;
                case PairKind::gap_two: e.target = d_monic / fac; break;
                case PairKind::adjacent: e.target = scalar_from<T>(Rat(-4)) * d_monic / fac; break;
                case PairKind::unrelated: e.target = T(0); break;
            }
            e.delta = e.sum - e.target;
            if constexpr (std::is_same_v<T, Cplx>) {
                e.pass = approx_zero(e.delta, mag + std::abs(e.target), pol);
                e.ratio = std::abs(e.target) > 0 ? std::abs(e.sum) / std::abs(e.target) : 1.0;
            } else {
                e.pass = e.delta == T(0);
                e.ratio = e.target != T(0) ? to_double(Rat(e.sum / e.target)) : 1.0;
            }
            report.pass = report.pass && e.pass;
            report.entries.push_back(std::move(e));
        }
    }
    return report;
}

}  // namespace charform
