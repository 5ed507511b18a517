#include "charform/hmatrix.hpp"

#include <cmath>

namespace charform {

std::vector<std::vector<Int>> HMatrix::rows() const {
    std::vector<std::vector<Int>> out(size());
    for (unsigned i = 0; i < size(); ++i) {
        out[i].reserve(size());
        for (unsigned j = 0; j < size(); ++j) out[i].push_back(at(i, j));
    }
    return out;
}

namespace {

// Lower-triangle generator, 1-based indices, i >= j:
//   h_ij = (1/6)(n i^3 - (3/2)n(n+1) i^2 + (1/2)n(3n+1) i + (1/2)(n^4 - n^2))
//        - (1/4)(i^2 - (2n+1) i + n(n+1)) (j-1) j
Rat generator_entry(unsigned n, unsigned i, unsigned j) {
    const Rat N(static_cast<long>(n));
    const Rat I(static_cast<long>(i));
    const Rat J(static_cast<long>(j));
    const Rat cubic = N * I * I * I - Rat(3, 2) * N * (N + 1) * I * I +
                      Rat(1, 2) * N * (3 * N + 1) * I +
                      Rat(1, 2) * (N * N * N * N - N * N);
    const Rat quad = (I * I - (2 * N + 1) * I + N * (N + 1)) * (J - 1) * J;
    return cubic / 6 - quad / 4;
}

Int require_integer(const Rat& v, const char* what) {
    if (!is_integer(v)) throw std::logic_error(std::string(what) + ": generator produced a non-integer entry");
    return Int(v.get_num());
}

}  // namespace

HMatrix build_hmatrix(unsigned n) {
    if (n < 2) throw std::invalid_argument("build_hmatrix: n must be >= 2");
    const unsigned m = n - 1;
    std::vector<Int> entries(static_cast<std::size_t>(m) * m);
    for (unsigned i = 1; i <= m; ++i) {
        for (unsigned j = 1; j <= i; ++j) {
            Int v = require_integer(generator_entry(n, i, j), "build_hmatrix");
            entries[(i - 1) * m + (j - 1)] = v;
            entries[(j - 1) * m + (i - 1)] = v;
        }
    }
    return HMatrix(n, std::move(entries));
}

Int diagonal_entry(unsigned n, unsigned i) {
    if (n < 2 || i < 1 || i > n - 1) throw std::invalid_argument("diagonal_entry: index out of range");
    const Rat N(static_cast<long>(n));
    const Rat I(static_cast<long>(i));
    // (1/12)(-3 i^4 + 2(4n+3) i^3 - 3(2n^2+4n+1) i^2 + 2n(3n+2) i + n^4 - n^2)
    const Rat v = (Rat(-3) * I * I * I * I + 2 * (4 * N + 3) * I * I * I -
                   3 * (2 * N * N + 4 * N + 1) * I * I + 2 * N * (3 * N + 2) * I +
                   N * N * N * N - N * N) /
                  12;
    return require_integer(v, "diagonal_entry");
}

double diagonal_factored(unsigned n, unsigned i) {
    if (n < 2 || i < 1 || i > n - 1) throw std::invalid_argument("diagonal_factored: index out of range");
    const double nd = n, id = i;
    const double s = std::sqrt(16.0 * nd * nd + 9.0);
    const double r1 = (2.0 * nd + 3.0 + s) / 6.0;
    const double r2 = (2.0 * nd + 3.0 - s) / 6.0;
    return -0.25 * (id - nd - 1.0) * (id - nd) * (id - r1) * (id - r2);
}

Rat hmatrix_prefactor(unsigned n) {
    if (n < 2) throw std::invalid_argument("hmatrix_prefactor: n must be >= 2");
    return factorial(n - 1) * factorial(n - 2);
}

}  // namespace charform
