#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "charform/checks.hpp"
#include "charform/discriminant.hpp"
#include "charform/fuzz.hpp"
#include "charform/golden.hpp"
#include "charform/hmatrix.hpp"
#include "charform/json_io.hpp"
#include "charform/report.hpp"
#include "charform/rewrite.hpp"
#include "charform/rootspace.hpp"
#include "charform/solver.hpp"

namespace {

using namespace charform;
using nlohmann::ordered_json;

constexpr const char* kSignConventionNote =
    "Root tuples use the factored-form sign convention: an entry r stands for the factor "
    "(x + r), so the polynomial vanishes at -r. Coefficients are listed ascending, a0 first.";

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> items;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            items.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    items.push_back(cur);
    for (auto& s : items) {
        const auto a = s.find_first_not_of(" \t");
        const auto b = s.find_last_not_of(" \t");
        if (a == std::string::npos) throw std::invalid_argument("empty item in list '" + csv + "'");
        s = s.substr(a, b - a + 1);
    }
    return items;
}

std::vector<Rat> parse_rat_list(const std::string& csv) {
    std::vector<Rat> out;
    for (const std::string& item : split_list(csv)) out.push_back(parse_rat(item));
    return out;
}

// "re" or "re:im"
Cplx parse_cplx(const std::string& item) {
    const auto colon = item.find(':');
    std::size_t used = 0;
    const double re = std::stod(item.substr(0, colon), &used);
    if (used != (colon == std::string::npos ? item.size() : colon))
        throw std::invalid_argument("malformed number '" + item + "'");
    double im = 0.0;
    if (colon != std::string::npos) {
        const std::string rest = item.substr(colon + 1);
        im = std::stod(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("malformed number '" + item + "'");
    }
    return {re, im};
}

std::vector<Cplx> parse_cplx_list(const std::string& csv) {
    std::vector<Cplx> out;
    for (const std::string& item : split_list(csv)) out.push_back(parse_cplx(item));
    return out;
}

Polynomial<Rat> exact_poly_from(const std::string& csv) {
    auto coeffs = parse_rat_list(csv);
    if (coeffs.size() < 3)
        throw std::invalid_argument("need at least 3 coefficients (degree >= 2), a0 first");
    if (coeffs.back() == 0) throw std::invalid_argument("leading coefficient must be nonzero");
    return Polynomial<Rat>(std::move(coeffs));
}

Polynomial<Cplx> approx_poly_from(const std::string& csv) {
    auto coeffs = parse_cplx_list(csv);
    if (coeffs.size() < 3)
        throw std::invalid_argument("need at least 3 coefficients (degree >= 2), a0 first");
    if (coeffs.back() == Cplx(0.0)) throw std::invalid_argument("leading coefficient must be nonzero");
    return Polynomial<Cplx>(std::move(coeffs));
}

ordered_json json_int(const Int& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

struct Shared {
    std::string format = "json";
    TolerancePolicy pol{};
    unsigned cap = kDefaultPermutationCap;
    std::uint64_t seed = 0;

    ReportFormat fmt() const { return parse_format(format); }
};

// ---- hmatrix ---------------------------------------------------------

int run_hmatrix(const Shared& shared, unsigned n) {
    const HMatrix h = build_hmatrix(n);
    const Rat pre = hmatrix_prefactor(n);
    switch (shared.fmt()) {
        case ReportFormat::json: {
            ordered_json j{{"n", n}, {"prefactor", rat_str(pre)}};
            auto rows = ordered_json::array();
            for (const auto& row : h.rows()) {
                auto r = ordered_json::array();
                for (const Int& v : row) r.push_back(json_int(v));
                rows.push_back(std::move(r));
            }
            j["matrix"] = std::move(rows);
            emit(j);
            break;
        }
        case ReportFormat::csv: {
            std::cout << "prefactor," << rat_str(pre) << "\n";
            for (const auto& row : h.rows()) {
                for (std::size_t i = 0; i < row.size(); ++i)
                    std::cout << (i ? "," : "") << row[i].get_str();
                std::cout << "\n";
            }
            break;
        }
        case ReportFormat::pretty: {
            std::cout << "n: " << n << "\nprefactor: " << rat_str(pre) << "\n";
            std::size_t width = 0;
            for (const auto& row : h.rows())
                for (const Int& v : row) width = std::max(width, v.get_str().size());
            for (const auto& row : h.rows()) {
                for (const Int& v : row) {
                    std::string s = v.get_str();
                    std::cout << std::string(width - s.size() + 1, ' ') << s;
                }
                std::cout << "\n";
            }
            break;
        }
    }
    return 0;
}

// ---- discriminant ----------------------------------------------------

int run_discriminant(const Shared& shared, const std::string& coeffs, const std::string& mode) {
    ordered_json j;
    if (mode == "exact") {
        const auto p = exact_poly_from(coeffs);
        const auto d = discriminant(p);
        j["n"] = d.n;
        j["D"] = rat_str(d.d);
        j["normalized"] = rat_str(normalized_value(d, p.leading()));
        j["prefactor"] = rat_str(d.prefactor);
        j["sign"] = d.d == 0 ? "zero" : (d.d > 0 ? "positive" : "negative");
        j["perfect_square"] = is_perfect_square(d.d);
        j["integer"] = is_integer(d.d);
        if (is_perfect_square(d.d)) {
            auto cands = ordered_json::array();
            for (const Rat& c : candidate_solutions(p)) cands.push_back(rat_str(c));
            j["candidates"] = std::move(cands);
        } else {
            j["candidates"] = "non-square";
        }
    } else if (mode == "approx") {
        const auto p = approx_poly_from(coeffs);
        const auto d = discriminant(p);
        j["n"] = d.n;
        j["D"] = scalar_str(d.d);
        j["normalized"] = scalar_str(normalized_value(d, p.leading()));
        j["prefactor"] = rat_str(d.prefactor);
        const double re = d.d.real(), im = d.d.imag();
        j["sign"] = std::abs(im) > 1e-12 * std::abs(d.d)
                        ? "complex"
                        : (re == 0.0 ? "zero" : (re > 0 ? "positive" : "negative"));
        auto cands = ordered_json::array();
        for (const Cplx& c : candidate_solutions(p)) cands.push_back(scalar_str(c));
        j["candidates"] = std::move(cands);
    } else {
        throw std::invalid_argument("mode must be exact or approx");
    }

    switch (shared.fmt()) {
        case ReportFormat::json: emit(j); break;
        case ReportFormat::csv: {
            std::string header, row;
            for (const auto& [key, value] : j.items()) {
                header += (header.empty() ? "" : ",") + key;
                std::string v = value.is_string() ? value.get<std::string>() : value.dump();
                if (value.is_array()) {
                    v.clear();
                    for (const auto& e : value) v += (v.empty() ? "" : "|") + e.get<std::string>();
                }
                row += (row.empty() ? "" : ",") + v;
            }
            std::cout << header << "\n" << row << "\n";
            break;
        }
        case ReportFormat::pretty:
            for (const auto& [key, value] : j.items())
                std::cout << key << ": "
                          << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
            break;
    }
    return 0;
}

// ---- roots -----------------------------------------------------------

int run_roots(const Shared& shared, const std::string& coeffs, const SolverConfig& cfg) {
    auto items = split_list(coeffs);
    std::vector<Cplx> c;
    for (const auto& item : items) {
        try {
            c.push_back(to_cplx(parse_rat(item)));
        } catch (const std::invalid_argument&) {
            c.push_back(parse_cplx(item));
        }
    }
    if (c.size() < 2) throw std::invalid_argument("need at least 2 coefficients (degree >= 1)");
    if (c.back() == Cplx(0.0)) throw std::invalid_argument("leading coefficient must be nonzero");
    const Polynomial<Cplx> p((std::vector<Cplx>(c)));
    if (p.degree() + 1 != c.size())
        throw std::invalid_argument("leading coefficient must be nonzero");

    RootResult result;
    bool converged = true;
    try {
        result = find_roots(p, cfg);
    } catch (const SolverError& err) {
        result = err.best;
        converged = false;
        std::cerr << "error: " << err.what() << "\n";
    }
    const auto tuple = to_root_tuple(result.roots, p.leading());

    switch (shared.fmt()) {
        case ReportFormat::json: {
            ordered_json j;
            j["n"] = p.degree();
            j["converged"] = converged;
            j["cluster_relaxed"] = result.cluster_relaxed;
            auto roots = ordered_json::array();
            for (const Cplx& r : result.roots) roots.push_back({r.real(), r.imag()});
            j["roots"] = std::move(roots);
            j["residuals"] = result.residuals;
            auto tup = ordered_json::array();
            for (const Cplx& r : tuple.roots) tup.push_back({r.real(), r.imag()});
            j["tuple"] = std::move(tup);
            emit(j);
            break;
        }
        case ReportFormat::csv: {
            std::cout << "re,im,residual\n";
            for (std::size_t i = 0; i < result.roots.size(); ++i)
                std::cout << format_double(result.roots[i].real()) << ','
                          << format_double(result.roots[i].imag()) << ','
                          << format_double(result.residuals[i]) << "\n";
            break;
        }
        case ReportFormat::pretty: {
            for (std::size_t i = 0; i < result.roots.size(); ++i)
                std::cout << "root " << scalar_str(result.roots[i])
                          << "  residual " << format_double(result.residuals[i]) << "\n";
            std::cout << "tuple:";
            for (const Cplx& r : tuple.roots) std::cout << ' ' << scalar_str(r);
            std::cout << "\n";
            break;
        }
    }
    return converged ? 0 : 1;
}

// ---- transform -------------------------------------------------------

int run_transform(const Shared& shared, const std::string& roots_csv, const std::string& leading,
                  const std::string& reference, const std::string& b_csv) {
    ordered_json j;
    if (!roots_csv.empty()) {
        RootTuple<Rat> t;
        t.roots = parse_rat_list(roots_csv);
        t.leading = leading.empty() ? Rat(1) : parse_rat(leading);
        if (t.roots.size() < 2) throw std::invalid_argument("need at least 2 roots");
        if (t.leading == 0) throw std::invalid_argument("leading coefficient must be nonzero");

        const auto set = roots_to_characteristic(t);
        const unsigned n = t.degree();
        // recompute the reference entry from a_{n-1}/a_n as a cross-check
        const Rat sum_coeff = sum_coefficient(t) / t.leading;
        const Rat ref_back = reference_root(sum_coeff, set.b, n);

        j["direction"] = "to-characteristic";
        j["n"] = n;
        j["reference"] = rat_str(set.reference);
        auto b = ordered_json::array();
        for (const Rat& v : set.b) b.push_back(rat_str(v));
        j["b"] = std::move(b);
        j["reference_check"] = rat_str(ref_back);
        j["reference_check_pass"] = ref_back == set.reference;
    } else {
        if (reference.empty() || b_csv.empty())
            throw std::invalid_argument("inverse transform needs --reference and --b");
        CharacteristicSet<Rat> set;
        set.reference = parse_rat(reference);
        set.b = parse_rat_list(b_csv);
        const auto t = characteristic_to_roots(set);

        j["direction"] = "to-roots";
        j["n"] = t.degree();
        auto roots = ordered_json::array();
        for (const Rat& r : t.roots) roots.push_back(rat_str(r));
        j["roots"] = std::move(roots);
        j["leading"] = rat_str(t.leading);
    }

    switch (shared.fmt()) {
        case ReportFormat::json: emit(j); break;
        case ReportFormat::csv:
        case ReportFormat::pretty:
            for (const auto& [key, value] : j.items())
                std::cout << key << ": "
                          << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
            break;
    }
    return 0;
}

// ---- verify ----------------------------------------------------------

const std::vector<std::string> kVerifyChecks = {"eq2", "eq4", "eq5", "eq11", "eq12"};

int run_verify(const Shared& shared, const std::string& coeffs, const std::string& mode,
               std::vector<std::string> checks, const std::string& roots_csv) {
    if (checks.empty() || (checks.size() == 1 && checks[0] == "all")) checks = kVerifyChecks;
    for (const auto& c : checks)
        if (std::find(kVerifyChecks.begin(), kVerifyChecks.end(), c) == kVerifyChecks.end())
            throw std::invalid_argument("unknown check '" + c + "'");

    const CheckOptions opt{shared.pol, shared.cap};
    std::vector<CheckRecord> records;

    if (mode == "exact") {
        const auto p = exact_poly_from(coeffs);
        const std::string digest = digest_of(p);
        records = coefficient_checks(p, opt, digest);
        if (!roots_csv.empty()) {
            RootTuple<Rat> t;
            t.roots = parse_rat_list(roots_csv);
            t.leading = p.leading();
            if (!(expand_factored(t) == p))
                throw std::invalid_argument(
                    "provided roots do not expand to the given coefficients (remember the "
                    "sign convention: an entry r is a factor (x + r))");
            auto more = tuple_checks(t, opt, digest);
            records.insert(records.end(), more.begin(), more.end());
        } else {
            // no exact roots supplied: find them numerically and run the
            // tuple checks in approximate arithmetic
            const auto solved = find_roots(p);
            const auto tuple = to_root_tuple(solved.roots, to_cplx(p.leading()));
            auto more = tuple_checks(tuple, opt, digest);
            records.insert(records.end(), more.begin(), more.end());
        }
    } else if (mode == "approx") {
        if (!roots_csv.empty())
            throw std::invalid_argument("--roots is only supported in exact mode");
        const auto p = approx_poly_from(coeffs);
        const std::string digest = digest_of(p);
        records = coefficient_checks(p, opt, digest);
        const auto solved = find_roots(p);
        const auto tuple = to_root_tuple(solved.roots, p.leading());
        auto more = tuple_checks(tuple, opt, digest);
        records.insert(records.end(), more.begin(), more.end());
    } else {
        throw std::invalid_argument("mode must be exact or approx");
    }

    VerificationReport report;
    for (auto& rec : records)
        if (std::find(checks.begin(), checks.end(), rec.check) != checks.end())
            report.records.push_back(std::move(rec));

    std::cout << render_report(report, shared.fmt());
    return report.all_pass() ? 0 : 1;
}

// ---- permute ---------------------------------------------------------

const char* kind_str(PairKind k) {
    switch (k) {
        case PairKind::lead_pair: return "lead_pair";
        case PairKind::gap_two: return "gap_two";
        case PairKind::adjacent: return "adjacent";
        case PairKind::unrelated: return "unrelated";
    }
    return "?";
}

int run_permute(const Shared& shared, const std::string& roots_csv, const std::string& leading,
                std::vector<std::string> checks) {
    if (checks.empty() || (checks.size() == 1 && checks[0] == "all")) checks = {"16", "17", "18"};
    for (const auto& c : checks)
        if (c != "16" && c != "17" && c != "18")
            throw std::invalid_argument("unknown check '" + c + "' (expected 16, 17, 18 or all)");
    const auto want = [&checks](const char* id) {
        return std::find(checks.begin(), checks.end(), id) != checks.end();
    };

    RootTuple<Rat> t;
    t.roots = parse_rat_list(roots_csv);
    t.leading = leading.empty() ? Rat(1) : parse_rat(leading);
    if (t.roots.size() < 2) throw std::invalid_argument("need at least 2 roots");
    if (t.leading == 0) throw std::invalid_argument("leading coefficient must be nonzero");

    const auto fam = enumerate_sets(t, shared.cap);
    const auto p = expand_factored(t);
    const auto d = discriminant(p);
    const std::string digest = digest_of(t);
    const unsigned n = t.degree();

    ordered_json j{{"n", n}, {"sets", fam.sets.size()}, {"D", rat_str(d.d)}};
    VerificationReport report;

    if (want("16")) {
        // informational: the predicate depends on the sequence ordering,
        // and no claim is made that the enumeration order satisfies it
        j["organized"] = organized_check(fam.sets);
    }
    if (want("17")) {
        const auto sums = sum_property(fam);
        auto arr = ordered_json::array();
        Rat worst(0);
        for (const Rat& s : sums) {
            arr.push_back(rat_str(s));
            worst = std::max(worst, rat_abs(s));
        }
        j["sums"] = std::move(arr);
        report.records.push_back(
            {"eq17", n, digest, worst == 0, rat_str(worst), "0", rat_str(worst)});
    }
    if (want("18")) {
        const auto prod = product_relations(fam, d);
        auto arr = ordered_json::array();
        Rat worst(0);
        for (const auto& e : prod.entries) {
            arr.push_back(ordered_json{{"i", e.i},
                                       {"j", e.j},
                                       {"kind", kind_str(e.kind)},
                                       {"sum", rat_str(e.sum)},
                                       {"target", rat_str(e.target)},
                                       {"pass", e.pass},
                                       {"ratio", e.ratio}});
            worst = std::max(worst, rat_abs(e.delta));
        }
        j["pairs"] = std::move(arr);
        report.records.push_back(
            {"eq18", n, digest, prod.pass, rat_str(worst), "0", rat_str(worst)});
    }

    auto recs = ordered_json::array();
    for (const auto& r : report.records)
        recs.push_back(ordered_json{{"check", r.check},
                                    {"degree", r.degree},
                                    {"digest", r.digest},
                                    {"pass", r.pass},
                                    {"lhs", r.lhs},
                                    {"rhs", r.rhs},
                                    {"delta", r.delta}});
    j["records"] = std::move(recs);
    j["summary"] = ordered_json{
        {"total", report.records.size()}, {"passed", report.passed()}, {"failed", report.failed()}};

    switch (shared.fmt()) {
        case ReportFormat::json: emit(j); break;
        case ReportFormat::csv: std::cout << render_report(report, ReportFormat::csv); break;
        case ReportFormat::pretty: {
            if (j.contains("organized"))
                std::cout << "organized (enumeration order): " << j["organized"].dump() << "\n";
            std::cout << render_report(report, ReportFormat::pretty);
            break;
        }
    }
    return report.all_pass() ? 0 : 1;
}

// ---- fuzz ------------------------------------------------------------

int run_fuzz_cmd(const Shared& shared, FuzzConfig cfg) {
    cfg.pol = shared.pol;
    cfg.permutation_cap = shared.cap;
    cfg.seed = shared.seed;
    const auto report = run_fuzz(cfg);
    if (shared.fmt() == ReportFormat::json) {
        std::cout << fuzz_report_bytes(cfg, report);
    } else {
        std::cout << render_report(report, shared.fmt());
    }
    return report.all_pass() ? 0 : 1;
}

// ---- golden-tables ---------------------------------------------------

int run_golden_tables() {
    ordered_json j;
    for (unsigned n : golden::degrees()) {
        const std::string key = std::to_string(n);
        auto rows = ordered_json::array();
        for (const auto& row : golden::hmatrix_rows(n)) rows.push_back(row);
        j["matrices"][key] = std::move(rows);
        const auto eq = golden::equation_constants(n);
        j["equations"][key] = ordered_json{{"slope_factor", eq.slope_factor},
                                           {"shift_factor", eq.shift_factor},
                                           {"square_term", eq.square_term},
                                           {"cross_term", eq.cross_term}};
        j["prefactors"][key] = golden::prefactor(n);
    }
    emit(j);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string("charform - exact toolkit for the characteristic discriminant of "
                             "degree-n polynomials.\n") +
                 kSignConventionNote};
    app.fallthrough();
    app.require_subcommand(1);

    Shared shared;
    if (const char* env = std::getenv("CHARFORM_CAP")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end == env || *end != '\0' || v < 2) {
            std::cerr << "error: CHARFORM_CAP must be an integer >= 2\n";
            return 2;
        }
        shared.cap = static_cast<unsigned>(v);
    }

    app.add_option("--format", shared.format, "output format: json, csv or pretty")
        ->capture_default_str();
    app.add_option("--tol", shared.pol.rel_tol, "relative tolerance for approximate comparisons")
        ->capture_default_str();
    app.add_option("--abs-floor", shared.pol.abs_floor, "absolute floor for approximate comparisons")
        ->capture_default_str();
    app.add_option("--cap", shared.cap, "permutation enumeration cap (env CHARFORM_CAP)")
        ->capture_default_str();
    app.add_option("--seed", shared.seed, "random seed for fuzz")->capture_default_str();

    int rc = 0;

    // hmatrix
    auto* cmd_h = app.add_subcommand("hmatrix", "print the quadratic-form matrix for degree n");
    unsigned hm_n = 0;
    cmd_h->add_option("--n", hm_n, "polynomial degree (>= 2)")->required();
    cmd_h->callback([&] { rc = run_hmatrix(shared, hm_n); });

    // discriminant
    auto* cmd_d = app.add_subcommand("discriminant",
                                     "discriminant, normalized value and candidate solutions");
    std::string d_coeffs, d_mode = "exact";
    cmd_d->add_option("--coeffs", d_coeffs, "a0,a1,...,an ascending")->required();
    cmd_d->add_option("--mode", d_mode, "exact (p/q entries) or approx (re[:im] entries)")
        ->capture_default_str();
    cmd_d->callback([&] { rc = run_discriminant(shared, d_coeffs, d_mode); });

    // roots
    auto* cmd_r = app.add_subcommand("roots", "numerical roots with residuals");
    std::string r_coeffs;
    SolverConfig solver_cfg;
    cmd_r->add_option("--coeffs", r_coeffs, "a0,a1,...,an ascending (p/q or re[:im])")->required();
    cmd_r->add_option("--max-iter", solver_cfg.max_iterations, "iteration budget")
        ->capture_default_str();
    cmd_r->add_option("--residual-tol", solver_cfg.residual_tol, "relative residual bound")
        ->capture_default_str();
    cmd_r->add_option("--restarts", solver_cfg.restart_count, "restart budget")
        ->capture_default_str();
    cmd_r->callback([&] { rc = run_roots(shared, r_coeffs, solver_cfg); });

    // transform
    auto* cmd_t = app.add_subcommand(
        "transform", "convert between a root tuple and its reference/offset form");
    std::string t_roots, t_leading, t_reference, t_b;
    auto* t_roots_opt = cmd_t->add_option("--roots", t_roots, "tuple entries r1,...,rn");
    cmd_t->add_option("--leading", t_leading, "leading coefficient (with --roots)");
    auto* t_ref_opt = cmd_t->add_option("--reference", t_reference, "reference entry x1");
    cmd_t->add_option("--b", t_b, "offsets b1,...,b(n-1) (with --reference)");
    t_roots_opt->excludes(t_ref_opt);
    cmd_t->callback([&] { rc = run_transform(shared, t_roots, t_leading, t_reference, t_b); });

    // verify
    auto* cmd_v = app.add_subcommand("verify", "run the identity checks on one polynomial");
    std::string v_coeffs, v_mode = "exact", v_roots;
    std::vector<std::string> v_checks;
    cmd_v->add_option("--coeffs", v_coeffs, "a0,a1,...,an ascending")->required();
    cmd_v->add_option("--mode", v_mode, "exact or approx")->capture_default_str();
    cmd_v->add_option("--checks", v_checks,
                      "subset of eq2,eq4,eq5,eq11,eq12 (default all)")
        ->delimiter(',');
    cmd_v->add_option("--roots", v_roots,
                      "known exact tuple entries r1,...,rn; must expand to --coeffs");
    cmd_v->callback([&] { rc = run_verify(shared, v_coeffs, v_mode, v_checks, v_roots); });

    // permute
    auto* cmd_p = app.add_subcommand(
        "permute", "enumerate all n! offset sets and check the family identities");
    std::string p_roots, p_leading;
    std::vector<std::string> p_checks;
    cmd_p->add_option("--roots", p_roots, "tuple entries r1,...,rn")->required();
    cmd_p->add_option("--leading", p_leading, "leading coefficient (default 1)");
    cmd_p->add_option("--check", p_checks, "16, 17, 18 or all (repeatable; 16 is informational)");
    cmd_p->callback([&] { rc = run_permute(shared, p_roots, p_leading, p_checks); });

    // fuzz
    auto* cmd_f = app.add_subcommand("fuzz", "randomized identity verification, seeded");
    FuzzConfig fuzz_cfg;
    cmd_f->add_option("--trials", fuzz_cfg.trials, "number of random tuples")
        ->capture_default_str();
    cmd_f->add_option("--degree-min", fuzz_cfg.degree_min, "minimum degree")->capture_default_str();
    cmd_f->add_option("--degree-max", fuzz_cfg.degree_max, "maximum degree")->capture_default_str();
    cmd_f->add_flag("--approx", fuzz_cfg.approx, "complex floating mode instead of exact");
    cmd_f->add_option("--num-bound", fuzz_cfg.root_num_bound, "exact-root numerator bound")
        ->capture_default_str();
    cmd_f->add_option("--den-bound", fuzz_cfg.root_den_bound, "exact-root denominator bound")
        ->capture_default_str();
    cmd_f->add_option("--disk-radius", fuzz_cfg.disk_radius, "approx-root disk radius")
        ->capture_default_str();
    cmd_f->callback([&] { rc = run_fuzz_cmd(shared, fuzz_cfg); });

    // golden-tables (hidden): reference fixtures for the test suite
    auto* cmd_g = app.add_subcommand("golden-tables");
    cmd_g->group("");
    cmd_g->callback([&] { rc = run_golden_tables(); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const SolverError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
