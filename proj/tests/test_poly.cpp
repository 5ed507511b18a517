#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "charform/poly.hpp"

using namespace charform;

namespace {

Rat rnd_rat(std::mt19937_64& rng) {
    const long num = static_cast<long>(rng() % 41) - 20;
    const long den = 1 + static_cast<long>(rng() % 10);
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// power-sum evaluation, independent of Horner
template <typename T>
T naive_eval(const Polynomial<T>& p, const T& x) {
    T acc = scalar_from<T>(Rat(0));
    T xp = scalar_from<T>(Rat(1));
    for (std::size_t i = 0; i <= p.degree(); ++i) {
        acc += p.coeff(static_cast<unsigned>(i)) * xp;
        xp *= x;
    }
    return acc;
}

}  // namespace

TEST_CASE("construction trims trailing zeros and keeps the zero polynomial") {
    const Polynomial<Rat> p({Rat(1), Rat(2), Rat(0), Rat(0)});
    CHECK(p.degree() == 1);
    CHECK(p.coeffs().size() == 2);

    const Polynomial<Rat> z({Rat(0), Rat(0)});
    CHECK(z.degree() == 0);
    CHECK(z.coeff(0) == 0);
}

TEST_CASE("evaluation matches a naive power sum") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rat> coeffs;
        const std::size_t deg = 1 + rng() % 8;
        for (std::size_t i = 0; i <= deg; ++i) coeffs.push_back(rnd_rat(rng));
        if (coeffs.back() == 0) coeffs.back() = 1;
        const Polynomial<Rat> p(std::move(coeffs));
        for (int pt = 0; pt < 4; ++pt) {
            const Rat x = rnd_rat(rng);
            CHECK(p.evaluate(x) == naive_eval(p, x));
        }
    }
}

TEST_CASE("derivatives") {
    // f = 2 + 3x + 5x^3: f' = 3 + 15x^2, f'' = 30x, f''' = 30
    const Polynomial<Rat> p({Rat(2), Rat(3), Rat(0), Rat(5)});
    CHECK(p.derivative(0) == p);
    CHECK(p.derivative(1) == Polynomial<Rat>({Rat(3), Rat(0), Rat(15)}));
    CHECK(p.derivative(2) == Polynomial<Rat>({Rat(0), Rat(30)}));
    CHECK(p.derivative(3) == Polynomial<Rat>({Rat(30)}));
    CHECK(p.derivative(2) == p.derivative(1).derivative(1));
    CHECK_THROWS_AS(p.derivative(4), std::domain_error);
}

TEST_CASE("ring operations") {
    const Polynomial<Rat> a({Rat(1), Rat(1)});        // 1 + x
    const Polynomial<Rat> b({Rat(-1), Rat(1)});       // -1 + x
    CHECK(a * b == Polynomial<Rat>({Rat(-1), Rat(0), Rat(1)}));
    CHECK(a + b == Polynomial<Rat>({Rat(0), Rat(2)}));
    CHECK(a - a == Polynomial<Rat>({Rat(0)}));
    CHECK(Rat(3) * a == Polynomial<Rat>({Rat(3), Rat(3)}));
    CHECK(a.pow(0) == Polynomial<Rat>({Rat(1)}));
    CHECK(a.pow(3) == Polynomial<Rat>({Rat(1), Rat(3), Rat(3), Rat(1)}));

    // (a*b)' == a'b + ab' on random polynomials
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rat> ca, cb;
        for (int i = 0; i < 4; ++i) ca.push_back(rnd_rat(rng));
        for (int i = 0; i < 5; ++i) cb.push_back(rnd_rat(rng));
        const Polynomial<Rat> u(std::move(ca)), v(std::move(cb));
        if (u.degree() == 0 || v.degree() == 0) continue;
        CHECK((u * v).derivative(1) == u.derivative(1) * v + u * v.derivative(1));
    }
}

TEST_CASE("factored expansion follows the (x + r) convention") {
    // entries (1, 2) mean (x+1)(x+2) = 2 + 3x + x^2
    RootTuple<Rat> t;
    t.roots = {Rat(1), Rat(2)};
    CHECK(expand_factored(t) == Polynomial<Rat>({Rat(2), Rat(3), Rat(1)}));

    // the polynomial vanishes at the negated entries
    t.roots = {Rat(1, 2), Rat(-3), Rat(5)};
    t.leading = Rat(7);
    const auto p = expand_factored(t);
    CHECK(p.leading() == 7);
    for (const Rat& r : t.roots) CHECK(p.evaluate(-r) == 0);

    RootTuple<Rat> bad;
    CHECK_THROWS_AS(expand_factored(bad), std::invalid_argument);
    bad.roots = {Rat(1)};
    bad.leading = 0;
    CHECK_THROWS_AS(expand_factored(bad), std::invalid_argument);
}

TEST_CASE("second coefficient equals leading times entry sum") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        RootTuple<Rat> t;
        const std::size_t n = 2 + rng() % 5;
        Rat sum = 0;
        for (std::size_t i = 0; i < n; ++i) {
            t.roots.push_back(rnd_rat(rng));
            sum += t.roots.back();
        }
        t.leading = rnd_rat(rng);
        if (t.leading == 0) t.leading = 1;
        CHECK(sum_coefficient(t) == t.leading * sum);
        const auto p = expand_factored(t);
        CHECK(p.coeff(p.degree() - 1) == sum_coefficient(t));
    }
}

TEST_CASE("exact to approximate bridges") {
    const Polynomial<Rat> p({Rat(1, 2), Rat(-3), Rat(1)});
    const auto q = to_approx(p);
    CHECK(q.coeff(0) == Cplx(0.5, 0.0));
    CHECK(q.coeff(2) == Cplx(1.0, 0.0));

    RootTuple<Rat> t;
    t.roots = {Rat(1, 4)};
    t.leading = Rat(-2);
    const auto u = to_approx(t);
    CHECK(u.roots[0] == Cplx(0.25, 0.0));
    CHECK(u.leading == Cplx(-2.0, 0.0));
}
