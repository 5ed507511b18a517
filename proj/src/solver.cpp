#include "charform/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

namespace charform {

namespace {

constexpr double kClusterRadius = 1e-6;
constexpr double kClusterRelax = 100.0;

// f and f' at z, ascending coefficients.
std::pair<Cplx, Cplx> eval_with_derivative(const std::vector<Cplx>& c, const Cplx& z) {
    Cplx f(0.0), df(0.0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        df = df * z + f;
        f = f * z + *it;
    }
    return {f, df};
}

double relative_residual(const std::vector<Cplx>& c, const Cplx& z) {
    Cplx f(0.0);
    double denom = 0.0;
    const double az = std::abs(z);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        f = f * z + *it;
        denom = denom * az + std::abs(*it);
    }
    return denom > 0.0 ? std::abs(f) / denom : std::abs(f);
}

std::vector<Cplx> initial_circle(const std::vector<Cplx>& c, unsigned attempt) {
    const std::size_t m = c.size() - 1;
    double radius = 1.0;
    for (std::size_t i = 0; i < m; ++i) radius = std::max(radius, 1.0 + std::abs(c[i] / c[m]));
    radius *= 1.0 + 0.17 * attempt;
    const double phase = 0.39 + 0.83 * attempt;

    std::vector<Cplx> z(m);
    for (std::size_t k = 0; k < m; ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m) + phase;
        // slight radial stagger so no two guesses are conjugate-symmetric
        z[k] = std::polar(radius * (1.0 + 0.01 * static_cast<double>(k)), angle);
    }
    return z;
}

void aberth_pass(const std::vector<Cplx>& c, std::vector<Cplx>& z, unsigned max_iterations) {
    const std::size_t m = z.size();
    for (unsigned iter = 0; iter < max_iterations; ++iter) {
        bool moved = false;
        for (std::size_t k = 0; k < m; ++k) {
            const auto [f, df] = eval_with_derivative(c, z[k]);
            if (std::abs(f) == 0.0) continue;
            Cplx ratio;
            if (std::abs(df) == 0.0) {
                // stationary point: nudge off it instead of dividing by zero
                z[k] += Cplx(1e-8, 1e-8) * (1.0 + std::abs(z[k]));
                moved = true;
                continue;
            }
            ratio = f / df;
            Cplx repulsion(0.0);
            for (std::size_t j = 0; j < m; ++j) {
                if (j == k) continue;
                Cplx diff = z[k] - z[j];
                if (std::abs(diff) < 1e-300) diff = Cplx(1e-300, 0.0);
                repulsion += Cplx(1.0) / diff;
            }
            const Cplx denom = Cplx(1.0) - ratio * repulsion;
            const Cplx step = std::abs(denom) == 0.0 ? ratio : ratio / denom;
            z[k] -= step;
            if (std::abs(step) > 1e-14 * (1.0 + std::abs(z[k]))) moved = true;
        }
        if (!moved) break;
    }
}

void newton_polish(const std::vector<Cplx>& c, std::vector<Cplx>& z) {
    for (auto& zk : z) {
        for (int it = 0; it < 3; ++it) {
            const auto [f, df] = eval_with_derivative(c, zk);
            if (std::abs(f) == 0.0 || std::abs(df) == 0.0) break;
            const Cplx candidate = zk - f / df;
            if (relative_residual(c, candidate) < relative_residual(c, zk))
                zk = candidate;
            else
                break;
        }
    }
}

std::vector<bool> cluster_flags(const std::vector<Cplx>& z) {
    std::vector<bool> flags(z.size(), false);
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j)
            if (std::abs(z[i] - z[j]) < kClusterRadius) flags[i] = flags[j] = true;
    return flags;
}

void sort_canonical(std::vector<Cplx>& roots, std::vector<double>& residuals) {
    std::vector<std::size_t> idx(roots.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (roots[a].real() != roots[b].real()) return roots[a].real() < roots[b].real();
        return roots[a].imag() < roots[b].imag();
    });
    std::vector<Cplx> r;
    std::vector<double> s;
    r.reserve(idx.size());
    s.reserve(idx.size());
    for (std::size_t i : idx) {
        r.push_back(roots[i]);
        s.push_back(residuals[i]);
    }
    roots = std::move(r);
    residuals = std::move(s);
}

}  // namespace

RootResult find_roots(const Polynomial<Cplx>& p, const SolverConfig& cfg) {
    if (p.is_zero()) throw std::invalid_argument("find_roots: zero polynomial");
    if (p.degree() < 1) throw std::invalid_argument("find_roots: degree must be >= 1");
    for (const Cplx& c : p.coeffs()) ensure_finite(c, "find_roots");

    // split off exact zero roots: x^z * (reduced polynomial)
    std::vector<Cplx> c = p.coeffs();
    std::size_t zeros = 0;
    while (zeros < c.size() - 1 && c[zeros] == Cplx(0.0)) ++zeros;
    c.erase(c.begin(), c.begin() + zeros);

    RootResult best;
    double best_worst = std::numeric_limits<double>::infinity();

    for (unsigned attempt = 0; attempt <= cfg.restart_count; ++attempt) {
        RootResult res;
        res.roots.assign(zeros, Cplx(0.0));
        res.residuals.assign(zeros, 0.0);

        if (c.size() > 1) {
            std::vector<Cplx> z = initial_circle(c, attempt);
            aberth_pass(c, z, cfg.max_iterations);
            newton_polish(c, z);
            const auto clustered = cluster_flags(z);
            res.cluster_relaxed =
                std::any_of(clustered.begin(), clustered.end(), [](bool b) { return b; });
            for (std::size_t k = 0; k < z.size(); ++k) {
                res.roots.push_back(z[k]);
                res.residuals.push_back(relative_residual(c, z[k]));
            }

            double worst = 0.0;
            bool pass = true;
            for (std::size_t k = 0; k < z.size(); ++k) {
                const double allowed = clustered[k] ? cfg.residual_tol * kClusterRelax : cfg.residual_tol;
                worst = std::max(worst, res.residuals[zeros + k] / allowed);
                pass = pass && res.residuals[zeros + k] <= allowed;
            }
            if (!pass) {
                if (worst < best_worst) {
                    best_worst = worst;
                    sort_canonical(res.roots, res.residuals);
                    best = std::move(res);
                }
                continue;
            }
        }
        sort_canonical(res.roots, res.residuals);
        return res;
    }
    throw SolverError("find_roots: no convergence within restart budget", std::move(best));
}

RootResult find_roots(const Polynomial<Rat>& p, const SolverConfig& cfg) {
    return find_roots(to_approx(p), cfg);
}

RootTuple<Cplx> to_root_tuple(const std::vector<Cplx>& roots, const Cplx& leading) {
    RootTuple<Cplx> t;
    t.leading = leading;
    t.roots.reserve(roots.size());
    // 0.0 - r rather than -r keeps zero components at +0.0
    for (const Cplx& r : roots) t.roots.push_back(Cplx(0.0) - r);
    std::sort(t.roots.begin(), t.roots.end(), [](const Cplx& a, const Cplx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return t;
}

}  // namespace charform
