#include "charform/numeric.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace charform {

Rat factorial(unsigned long k) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return Rat(f);
}

Rat binomial(unsigned long n, unsigned long i) {
    if (i > n) throw std::invalid_argument("binomial: i > n");
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, i);
    return Rat(b);
}

bool is_finite(const Cplx& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

void ensure_finite(const Cplx& v, const char* context) {
    if (!is_finite(v)) {
        throw std::invalid_argument(std::string(context) + ": non-finite value");
    }
}

bool approx_eq(const Cplx& a, const Cplx& b, const TolerancePolicy& pol) {
    ensure_finite(a, "approx_eq");
    ensure_finite(b, "approx_eq");
    const double diff = std::abs(a - b);
    const double scale = std::max(std::abs(a), std::abs(b));
    return diff <= std::max(pol.abs_floor, pol.rel_tol * scale);
}

bool approx_zero(const Cplx& v, double magnitude, const TolerancePolicy& pol) {
    ensure_finite(v, "approx_zero");
    return std::abs(v) <= std::max(pol.abs_floor, pol.rel_tol * magnitude);
}

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t k = from; k < to; ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    }
    return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
    std::size_t begin = text.find_first_not_of(" \t");
    std::size_t end = text.find_last_not_of(" \t");
    if (begin == std::string::npos) throw std::invalid_argument("parse_rat: empty input");
    const std::string s = text.substr(begin, end - begin + 1);

    const std::size_t slash = s.find('/');
    std::size_t num_begin = 0;
    if (s[0] == '-') num_begin = 1;
    const std::size_t num_end = (slash == std::string::npos) ? s.size() : slash;
    if (!all_digits(s, num_begin, num_end)) {
        throw std::invalid_argument("parse_rat: malformed rational '" + text + "'");
    }
    if (slash != std::string::npos) {
        if (!all_digits(s, slash + 1, s.size())) {
            throw std::invalid_argument("parse_rat: malformed rational '" + text + "'");
        }
    }

    Rat q(s, 10);
    if (q.get_den() == 0) throw std::invalid_argument("parse_rat: zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

bool is_integer(const Rat& q) { return q.get_den() == 1; }

bool is_perfect_square(const Rat& q) {
    if (sgn(q) < 0) return false;
    return mpz_perfect_square_p(q.get_num().get_mpz_t()) != 0 &&
           mpz_perfect_square_p(q.get_den().get_mpz_t()) != 0;
}

Rat rat_sqrt(const Rat& q) {
    if (!is_perfect_square(q)) throw std::invalid_argument("rat_sqrt: not a perfect square");
    Int num, den;
    mpz_sqrt(num.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(den.get_mpz_t(), q.get_den().get_mpz_t());
    return Rat(num) / Rat(den);
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

std::string scalar_str(const Rat& q) { return rat_str(q); }

std::string scalar_str(const Cplx& v) {
    if (v.imag() == 0.0) return format_double(v.real());
    return format_double(v.real()) + ":" + format_double(v.imag());
}

}  // namespace charform
