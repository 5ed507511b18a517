#include "charform/checks.hpp"

#include <algorithm>
#include <cmath>

#include "charform/discriminant.hpp"
#include "charform/hmatrix.hpp"
#include "charform/rewrite.hpp"

namespace charform {

namespace {

template <class T>
std::string join_scalars(const std::vector<T>& v) {
    std::string out;
    for (const T& s : v) {
        if (!out.empty()) out += ',';
        out += scalar_str(s);
    }
    return out;
}

template <class T>
constexpr bool is_exact = std::is_same_v<T, Rat>;

// Rewrite identity, coefficient-wise: (slope*x + shift)^n - g + scale*tail
// against scale*f.
template <class T>
CheckRecord rewrite_record(const Polynomial<T>& p, const CheckOptions& opt, std::string digest) {
    const unsigned n = p.degree();
    const auto parts = detail::equation_parts<T>(p);
    const Polynomial<T> linear({parts.shift, parts.slope});
    const Polynomial<T> lhs =
        linear.pow(n) - Polynomial<T>(parts.g) + parts.scale * Polynomial<T>(parts.tail);
    const Polynomial<T> rhs = parts.scale * p;

    CheckRecord rec{"eq2", n, std::move(digest)};
    if constexpr (is_exact<T>) {
        Rat worst(0);
        for (unsigned i = 0; i <= n; ++i) worst = std::max(worst, rat_abs(lhs.coeff(i) - rhs.coeff(i)));
        rec.pass = worst == 0;
        rec.lhs = rat_str(worst);
        rec.rhs = "0";
        rec.delta = rec.lhs;
    } else {
        double worst = 0.0;
        bool ok = true;
        for (unsigned i = 0; i <= n; ++i) {
            const Cplx l = lhs.coeff(i), r = rhs.coeff(i);
            ok = ok && approx_eq(l, r, opt.pol);
            worst = std::max(worst, std::abs(l - r) / std::max({1.0, std::abs(l), std::abs(r)}));
        }
        rec.pass = ok;
        rec.lhs = format_double(worst);
        rec.rhs = "0";
        rec.delta = rec.lhs;
    }
    return rec;
}

// Quadratic endpoint: the last derived equation must coincide with the
// characteristic equation, and representable candidates must satisfy it
// (for n = 2 they are the points where f vanishes).
CheckRecord endpoint_record(const Polynomial<Rat>& p, const CheckOptions&, std::string digest) {
    const unsigned n = p.degree();
    const auto eq = characteristic_equation(p);

    CheckRecord rec{"eq5", n, std::move(digest)};
    Rat final_rhs = eq.rhs;
    bool consistent = true;
    const auto chain = derivative_chain(p);
    if (!chain.empty()) {
        const DerivedEquation& last = chain.back();
        final_rhs = last.rhs.coeff(0);
        consistent = last.exponent == 2 && last.slope == eq.slope && last.shift == eq.shift &&
                     last.rhs == Polynomial<Rat>({eq.rhs});
    }

    bool members_ok = true;
    if (is_perfect_square(eq.rhs)) {
        for (const Rat& cand : candidate_solutions(p)) {
            const Rat lin = eq.slope * cand + eq.shift;
            members_ok = members_ok && lin * lin == eq.rhs;
            if (n == 2) members_ok = members_ok && p.evaluate(cand) == 0;
        }
    }

    rec.lhs = rat_str(final_rhs);
    rec.rhs = rat_str(eq.rhs);
    rec.delta = rat_str(final_rhs - eq.rhs);
    rec.pass = consistent && members_ok;
    return rec;
}

CheckRecord endpoint_record(const Polynomial<Cplx>& p, const CheckOptions& opt, std::string digest) {
    const unsigned n = p.degree();
    const auto eq = characteristic_equation(p);

    CheckRecord rec{"eq5", n, std::move(digest)};
    bool ok = true;
    Cplx worst_sq = eq.rhs;
    double worst_dev = 0.0;
    for (const Cplx& cand : candidate_solutions(p)) {
        const Cplx lin = eq.slope * cand + eq.shift;
        const Cplx sq = lin * lin;
        ok = ok && approx_eq(sq, eq.rhs, opt.pol);
        if (std::abs(sq - eq.rhs) >= worst_dev) {
            worst_dev = std::abs(sq - eq.rhs);
            worst_sq = sq;
        }
        if (n == 2) {
            double mag = 0.0, ax = std::abs(cand), xp = 1.0;
            for (unsigned i = 0; i <= n; ++i) {
                mag += std::abs(p.coeff(i)) * xp;
                xp *= ax;
            }
            ok = ok && approx_zero(p.evaluate(cand), mag, opt.pol);
        }
    }
    rec.lhs = scalar_str(worst_sq);
    rec.rhs = scalar_str(eq.rhs);
    rec.delta = format_double(worst_dev);
    rec.pass = ok;
    return rec;
}

template <class T>
std::vector<CheckRecord> tuple_checks_impl(const RootTuple<T>& t, const CheckOptions& opt,
                                           std::string digest) {
    if (t.roots.size() < 2)
        throw std::invalid_argument("tuple_checks: need at least 2 tuple entries");
    if (digest.empty()) digest = digest_of(t);
    const unsigned n = t.degree();
    const Polynomial<T> p = expand_factored(t);
    std::vector<CheckRecord> out;

    {  // root-form residual at every vanishing point
        CheckRecord rec{"eq4", n, digest};
        if constexpr (is_exact<T>) {
            Rat worst(0);
            for (const Rat& x : t.roots) worst = std::max(worst, rat_abs(root_equation_residual(p, Rat(-x))));
            rec.pass = worst == 0;
            rec.lhs = rat_str(worst);
        } else {
            double worst = 0.0;
            bool ok = true;
            for (const Cplx& x : t.roots) {
                const Cplx at = Cplx(0.0) - x;
                const Cplx r = root_equation_residual(p, at);
                const double mag = root_equation_magnitude(p, at);
                ok = ok && approx_zero(r, mag, opt.pol);
                worst = std::max(worst, std::abs(r) / std::max(mag, 1.0));
            }
            rec.pass = ok;
            rec.lhs = format_double(worst);
        }
        rec.rhs = "0";
        rec.delta = rec.lhs;
        out.push_back(std::move(rec));
    }

    const auto set0 = roots_to_characteristic(t);
    const auto d = discriminant(p);

    {  // discriminant vs prefactored quadratic form
        const auto idrep = verify_identity(p, set0, opt.pol);
        CheckRecord rec{"eq11", n, digest};
        rec.pass = idrep.pass;
        rec.lhs = scalar_str(idrep.direct);
        rec.rhs = scalar_str(idrep.via_form);
        rec.delta = scalar_str(idrep.delta);
        out.push_back(std::move(rec));
    }

    {  // normalized discriminant vs bare quadratic form
        const T norm = normalized_value(d, p.leading());
        const T qf = quadratic_form(build_hmatrix(n), set0);
        CheckRecord rec{"eq12", n, digest};
        if constexpr (is_exact<T>) {
            rec.pass = norm == qf;
        } else {
            rec.pass = approx_eq(norm, qf, opt.pol);
        }
        rec.lhs = scalar_str(qf);
        rec.rhs = scalar_str(norm);
        rec.delta = scalar_str(T(qf - norm));
        out.push_back(std::move(rec));
    }

    if (n <= opt.permutation_cap) {
        const auto fam = enumerate_sets(t, opt.permutation_cap);

        {  // offset sums over the whole family
            CheckRecord rec{"eq17", n, digest};
            if constexpr (is_exact<T>) {
                Rat worst(0);
                for (const Rat& s : sum_property(fam)) worst = std::max(worst, rat_abs(s));
                rec.pass = worst == 0;
                rec.lhs = rat_str(worst);
            } else {
                double worst = 0.0;
                bool ok = true;
                for (unsigned i = 0; i + 1 < n; ++i) {
                    Cplx acc(0.0);
                    double mag = 0.0;
                    for (const auto& set : fam.sets) {
                        acc += set.b[i];
                        mag += std::abs(set.b[i]);
                    }
                    ok = ok && approx_zero(acc, mag, opt.pol);
                    worst = std::max(worst, std::abs(acc) / std::max(mag, 1.0));
                }
                rec.pass = ok;
                rec.lhs = format_double(worst);
            }
            rec.rhs = "0";
            rec.delta = rec.lhs;
            out.push_back(std::move(rec));
        }

        {  // pairwise product sums against their discriminant targets
            const auto prod = product_relations(fam, d, opt.pol);
            CheckRecord rec{"eq18", n, digest};
            rec.pass = prod.pass;
            if constexpr (is_exact<T>) {
                Rat worst(0);
                for (const auto& e : prod.entries) worst = std::max(worst, rat_abs(e.delta));
                rec.lhs = rat_str(worst);
            } else {
                double worst = 0.0;
                for (const auto& e : prod.entries) worst = std::max(worst, std::abs(e.delta));
                rec.lhs = format_double(worst);
            }
            rec.rhs = "0";
            rec.delta = rec.lhs;
            out.push_back(std::move(rec));
        }
    }
    return out;
}

}  // namespace

std::string digest_of(const Polynomial<Rat>& p) {
    return fnv1a_hex("poly-exact|" + join_scalars(p.coeffs()));
}

std::string digest_of(const Polynomial<Cplx>& p) {
    return fnv1a_hex("poly-approx|" + join_scalars(p.coeffs()));
}

std::string digest_of(const RootTuple<Rat>& t) {
    return fnv1a_hex("tuple-exact|" + join_scalars(t.roots) + "|" + scalar_str(t.leading));
}

std::string digest_of(const RootTuple<Cplx>& t) {
    return fnv1a_hex("tuple-approx|" + join_scalars(t.roots) + "|" + scalar_str(t.leading));
}

std::vector<CheckRecord> coefficient_checks(const Polynomial<Rat>& p, const CheckOptions& opt,
                                            std::string digest) {
    if (digest.empty()) digest = digest_of(p);
    return {rewrite_record(p, opt, digest), endpoint_record(p, opt, digest)};
}

std::vector<CheckRecord> coefficient_checks(const Polynomial<Cplx>& p, const CheckOptions& opt,
                                            std::string digest) {
    if (digest.empty()) digest = digest_of(p);
    return {rewrite_record(p, opt, digest), endpoint_record(p, opt, digest)};
}

std::vector<CheckRecord> tuple_checks(const RootTuple<Rat>& t, const CheckOptions& opt,
                                      std::string digest) {
    return tuple_checks_impl(t, opt, std::move(digest));
}

std::vector<CheckRecord> tuple_checks(const RootTuple<Cplx>& t, const CheckOptions& opt,
                                      std::string digest) {
    return tuple_checks_impl(t, opt, std::move(digest));
}

template <class T>
static std::vector<CheckRecord> battery_impl(const RootTuple<T>& t, const CheckOptions& opt) {
    const std::string digest = digest_of(t);
    auto records = coefficient_checks(expand_factored(t), opt, digest);
    auto rest = tuple_checks(t, opt, digest);
    records.insert(records.end(), std::make_move_iterator(rest.begin()),
                   std::make_move_iterator(rest.end()));
    return records;
}

std::vector<CheckRecord> full_battery(const RootTuple<Rat>& t, const CheckOptions& opt) {
    return battery_impl(t, opt);
}

std::vector<CheckRecord> full_battery(const RootTuple<Cplx>& t, const CheckOptions& opt) {
    return battery_impl(t, opt);
}

}  // namespace charform
