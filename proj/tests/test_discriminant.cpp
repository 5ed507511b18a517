#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "charform/discriminant.hpp"

using namespace charform;

namespace {

Rat rnd_rat(std::mt19937_64& rng) {
    const long num = static_cast<long>(rng() % 41) - 20;
    const long den = 1 + static_cast<long>(rng() % 10);
    Rat q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

TEST_CASE("worked cubic") {
    const Polynomial<Rat> p({Rat(0), Rat(3), Rat(4), Rat(1)});
    const auto d = discriminant(p);
    CHECK(d.n == 3);
    CHECK(d.d == 28);
    CHECK(d.prefactor == 2);
    CHECK(normalized_value(d, p.leading()) == 14);
}

TEST_CASE("quadratic case reduces to the classic discriminant") {
    // for n = 2 the value is a_1^2 - 4 a_2 a_0
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        Rat a0 = rnd_rat(rng), a1 = rnd_rat(rng), a2 = rnd_rat(rng);
        if (a2 == 0) a2 = 1;
        const Polynomial<Rat> p({a0, a1, a2});
        const auto d = discriminant(p);
        CHECK(d.d == a1 * a1 - 4 * a2 * a0);
        CHECK(d.prefactor == 1);
    }
}

TEST_CASE("depends only on the three leading coefficients") {
    const Polynomial<Rat> p({Rat(9), Rat(-7), Rat(3), Rat(4), Rat(1)});
    const Polynomial<Rat> q({Rat(100), Rat(55), Rat(3), Rat(4), Rat(1)});
    CHECK(discriminant(p).d == discriminant(q).d);
}

TEST_CASE("scaling the polynomial scales D by the square") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 20; ++trial) {
        const unsigned n = 2 + rng() % 5;
        std::vector<Rat> c;
        for (unsigned i = 0; i <= n; ++i) c.push_back(rnd_rat(rng));
        if (c.back() == 0) c.back() = 2;
        const Polynomial<Rat> p(std::move(c));
        Rat s = rnd_rat(rng);
        if (s == 0) s = Rat(1, 2);

        std::vector<Rat> sc;
        for (const Rat& q : p.coeffs()) sc.push_back(s * q);
        const Polynomial<Rat> ps(std::move(sc));

        CHECK(discriminant(ps).d == s * s * discriminant(p).d);
        // the normalized value is scale-invariant
        CHECK(normalized_value(discriminant(ps), ps.leading()) ==
              normalized_value(discriminant(p), p.leading()));
    }
}

TEST_CASE("candidates are the evaluation roots for quadratics") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 50; ++trial) {
        const Rat u = rnd_rat(rng), v = rnd_rat(rng);
        Rat a = rnd_rat(rng);
        if (a == 0) a = Rat(-5, 3);
        // a*(x - u)(x - v): tuple entries are -u, -v
        RootTuple<Rat> t;
        t.roots = {-u, -v};
        t.leading = a;
        const auto p = expand_factored(t);

        auto cands = candidate_solutions(p);
        std::sort(cands.begin(), cands.end());
        std::vector<Rat> expect{u, v};
        std::sort(expect.begin(), expect.end());
        CHECK(cands == expect);
        for (const Rat& c : cands) CHECK(p.evaluate(c) == 0);
    }
}

TEST_CASE("candidates satisfy the characteristic equation") {
    const Polynomial<Rat> p({Rat(2), Rat(-3), Rat(1)});
    const auto eq = characteristic_equation(p);
    for (const Rat& c : candidate_solutions(p)) {
        const Rat lin = eq.slope * c + eq.shift;
        CHECK(lin * lin == eq.rhs);
    }
}

TEST_CASE("non-square discriminant raises in exact mode") {
    const Polynomial<Rat> p({Rat(0), Rat(3), Rat(4), Rat(1)});  // D = 28
    CHECK_THROWS_AS(candidate_solutions(p), NonSquareError);
}

TEST_CASE("zero discriminant yields a doubled candidate") {
    // (x - 1)^2 = x^2 - 2x + 1: D = 4 - 4 = 0
    const Polynomial<Rat> p({Rat(1), Rat(-2), Rat(1)});
    CHECK(discriminant(p).d == 0);
    const auto cands = candidate_solutions(p);
    CHECK(cands[0] == 1);
    CHECK(cands[1] == 1);
}

TEST_CASE("approximate mode agrees with exact mode") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        const unsigned n = 2 + rng() % 5;
        std::vector<Rat> c;
        for (unsigned i = 0; i <= n; ++i) c.push_back(rnd_rat(rng));
        if (c.back() == 0) c.back() = 3;
        const Polynomial<Rat> p(std::move(c));
        const auto exact = discriminant(p);
        const auto approx = discriminant(to_approx(p));
        CHECK(approx.d.real() == doctest::Approx(to_double(exact.d)).epsilon(1e-12));
        CHECK(approx.d.imag() == 0.0);
    }
}

TEST_CASE("complex candidates square back to the discriminant") {
    const Polynomial<Cplx> p({Cplx(0), Cplx(3), Cplx(4), Cplx(1)});  // D = 28
    const auto eq = characteristic_equation(p);
    for (const Cplx& c : candidate_solutions(p)) {
        const Cplx lin = eq.slope * c + eq.shift;
        CHECK(std::abs(lin * lin - eq.rhs) <= 1e-9 * std::abs(eq.rhs));
    }
}

TEST_CASE("degree below two is rejected") {
    CHECK_THROWS_AS(discriminant(Polynomial<Rat>({Rat(1), Rat(1)})), std::invalid_argument);
}
