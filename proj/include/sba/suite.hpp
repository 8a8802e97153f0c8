#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "automorphism.hpp"
#include "classify.hpp"
#include "formats.hpp"
#include "hopf.hpp"
#include "phasespace.hpp"
#include "report.hpp"
#include "rmatrix.hpp"

namespace sba {

struct SuiteConfig {
    const Catalog* cat = nullptr;
    std::uint64_t seed = 1;
    int samples = 10;
    int order = 6;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

namespace suite {

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline std::string fmt_seconds(double s) {
    std::ostringstream o;
    o.setf(std::ios::fixed);
    o.precision(2);
    o << s << " s";
    return o.str();
}

inline std::string idx1(std::initializer_list<int> v) {
    std::string s = "(";
    bool first = true;
    for (int x : v) {
        s += (first ? "" : ",") + std::to_string(x + 1);
        first = false;
    }
    return s + ")";
}

inline std::string bindings_to_string(const Bindings& b) {
    std::string s;
    for (const auto& [k, v] : b) s += (s.empty() ? "" : ", ") + k + "=" + to_string(v);
    return s;
}

// Wedge-basis block w i j k = c as a tensor.
inline Tensor3 wedge_block(const std::vector<Entry>& es, const Grading& g, const Bindings& b) {
    Tensor3 t(g.size());
    for (const auto& e : es) t += eval_bound(e.value, b, e.line) * wedge3(e.idx[0], e.idx[1], e.idx[2], g);
    return t;
}

// `classify_at = "p = 1/3"` as bindings.
inline Bindings classify_point(const SourceFile& sf) {
    Bindings b;
    auto it = sf.meta.find("classify_at");
    if (it == sf.meta.end()) return b;
    std::istringstream in(it->second);
    std::string part;
    while (std::getline(in, part, ',')) {
        size_t eq = part.find('=');
        if (eq == std::string::npos) throw ParseError("classify_at expects name = value", 1, 1);
        b[detail::trim(part.substr(0, eq))] = parse_scalar(detail::trim(part.substr(eq + 1)), 1, 1);
    }
    return b;
}

struct Row {
    const SourceFile* sf;
    Bindings choice;
    std::string label;
};

// The epsilon-resolved dual rows.
inline std::vector<Row> table3_rows(const Catalog& cat) {
    std::vector<Row> rows;
    for (const auto& sf : cat.duals)
        for (const auto& c : choice_combinations(sf)) {
            auto it = sf.section_names.find("dual");
            std::string label = it != sf.section_names.end() ? it->second : sf.name;
            if (!c.empty()) label += " [" + bindings_to_string(c) + "]";
            rows.push_back({&sf, c, label});
        }
    return rows;
}

// Affine dimension of an r-family spanned by the named parameters.
inline int family_dimension(const std::vector<Entry>& block, int n, const Bindings& at,
                            const std::vector<std::string>& params) {
    Tensor2 r0 = build_r(block, n, at);
    std::vector<std::vector<Gauss>> diffs;
    int k = 0;
    for (const auto& p : params) {
        Bindings b = at;
        b[p] = b[p] + Gauss(3 + k++);
        Tensor2 d = build_r(block, n, b) - r0;
        std::vector<Gauss> v;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) v.push_back(d(i, j));
        diffs.push_back(v);
    }
    if (diffs.empty()) return 0;
    Matrix M(static_cast<int>(diffs.size()), n * n);
    for (size_t a = 0; a < diffs.size(); ++a)
        for (int c = 0; c < n * n; ++c) M(static_cast<int>(a), c) = diffs[a][c];
    return rank(M);
}

inline std::vector<std::string> params_in(const SourceFile& sf, std::initializer_list<const char*> sections) {
    std::vector<std::string> out;
    for (const auto& d : sf.params)
        for (const char* s : sections)
            if (d.section == s) out.push_back(d.name);
    return out;
}

inline Gauss random_gauss(std::mt19937_64& rng, bool complex) {
    Rational re = random_rational(rng, 4);
    Rational im = complex ? random_rational(rng, 4) : Rational(0);
    return Gauss(re, im);
}

// Triangularity expected from the prose accompanying each coboundary row.
inline Triangularity expected_verdict(const std::string& row, const Bindings& b, bool dual) {
    if (row == "row1" || (row == "row2" && !dual)) return Triangularity::Triangular;
    if (row == "row2" || row == "row3") return Triangularity::QuasiTriangular;
    bool special = b.count("eps") && b.count("k") && b.at("eps") == Gauss(-1) && b.at("k") == Gauss(4);
    return special ? Triangularity::Triangular : Triangularity::QuasiTriangular;
}

}  // namespace suite

// 1. Catalog validity: every algebra passes super Jacobi and antisymmetry.
inline CriterionResult criterion_catalog(const SuiteConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(cfg.seed + 1);
    int samples = std::max(5, cfg.samples);
    int families = 0, checks = 0;
    std::string fail;
    for (const auto& sf : cfg.cat->algebras) {
        ++families;
        auto combos = choice_combinations(sf);
        for (int s = 0; s < samples; ++s) {
            Bindings b = sample_params(sf, rng, combos[static_cast<size_t>(s) % combos.size()]);
            SuperAlgebra A = build_algebra(sf, b);
            auto j = check_super_jacobi(A);
            auto a = check_antisymmetry(A);
            ++checks;
            if ((!j.pass || !a.pass) && fail.empty())
                fail = sf.name + " at " + suite::bindings_to_string(b) +
                       (j.pass ? " antisymmetry" : " Jacobi " + suite::idx1({j.witness[0], j.witness[1], j.witness[2], j.witness[3]}));
        }
    }
    double sec = suite::seconds_since(t0);
    CriterionResult r{1, "catalog validity", fail.empty() && families == 36 && sec < 5.0, "", sec};
    r.detail = std::to_string(families) + " families x " + std::to_string(samples) + " samples, " +
               (fail.empty() ? "no violations" : "first violation: " + fail) + ", " + suite::fmt_seconds(sec) + " (limit 5 s)";
    return r;
}

// 2. Adjoint representation of (C3+A), entry for entry.
inline CriterionResult criterion_adjoint(const SuiteConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    SuperAlgebra A = build_algebra(cfg.cat->algebra("(C3+A)"), {});
    auto Y = adjoint_reps(A);
    std::vector<Matrix> want(4, Matrix(4, 4));
    want[1](3, 3) = -Gauss::i();
    want[2](0, 3) = Gauss(-1);
    want[2](3, 0) = Gauss(1);
    std::string bad;
    for (int i = 0; i < 4 && bad.empty(); ++i)
        for (int j = 0; j < 4 && bad.empty(); ++j)
            for (int k = 0; k < 4 && bad.empty(); ++k)
                if (Y[i](j, k) != want[i](j, k))
                    bad = "(Y^" + std::to_string(i + 1) + ")_" + std::to_string(j + 1) + std::to_string(k + 1) + " = " +
                          to_string(Y[i](j, k));
    CriterionResult r{2, "adjoint fidelity", bad.empty(), "", suite::seconds_since(t0)};
    r.detail = bad.empty() ? "Y1 = Y4 = 0, (Y2)44 = -i, (Y3)14 = -1, (Y3)41 = 1, all other entries zero" : "mismatch " + bad;
    return r;
}

// 3. Automorphism family of (C3+A) and random members.
inline CriterionResult criterion_automorphisms(const SuiteConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    SuperAlgebra A = build_algebra(cfg.cat->algebra("(C3+A)"), {});
    AutomorphismFamily fam = solve_automorphism_family(A);
    Poly a = Poly::var("A11"), c = Poly::var("A12"), d = Poly::var("A43"), b = Poly::var("A44");
    std::vector<std::vector<Poly>> want(4, std::vector<Poly>(4));
    want[0][0] = a;
    want[0][1] = c;
    want[1][1] = b * b;
    want[2][2] = a * b;
    want[3][2] = d;
    want[3][3] = b;
    bool pattern = fam.pattern == want;
    bool free = fam.free == std::vector<std::string>{"A11", "A12", "A43", "A44"};
    bool nz = fam.nonzero.count("A11") && fam.nonzero.count("A44");
    std::mt19937_64 rng(cfg.seed + 3);
    int ok = 0;
    for (int t = 0; t < 20; ++t) {
        Gauss va, vb;
        do va = suite::random_gauss(rng, t % 2);
        while (va.is_zero());
        do vb = suite::random_gauss(rng, t % 3 == 0);
        while (vb.is_zero());
        Matrix M = fam.instantiate({{"A11", va}, {"A44", vb}, {"A12", suite::random_gauss(rng, true)},
                                    {"A43", suite::random_gauss(rng, false)}});
        auto rep = is_automorphism(M, A);
        ok += rep.pass && rep.matrix_form_pass;
    }
    CriterionResult r{3, "automorphism family", pattern && free && nz && ok == 20 && !fam.stalled, "",
                      suite::seconds_since(t0)};
    r.detail = std::string("pattern ") + (pattern ? "matches" : "differs") + ", free {A11,A12,A43,A44} " +
               (free ? "yes" : "no") + ", A11,A44 nonzero " + (nz ? "yes" : "no") + ", random members " +
               std::to_string(ok) + "/20";
    return r;
}

// 4. The four dual solution families satisfy dual and mixed Jacobi.
inline CriterionResult criterion_theorem1(const SuiteConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    SuperAlgebra A = build_algebra(cfg.cat->algebra("(C3+A)"), {});
    std::mt19937_64 rng(cfg.seed + 4);
    int samples = std::max(10, cfg.samples);
    std::string detail;
    bool pass = true;
    for (const auto& c : theorem_one_cases()) {
        int ok = 0, tried = 0;
        while (tried < samples) {
            std::vector<Gauss> p;
            for (size_t k = 0; k < c.params.size(); ++k) p.push_back(suite::random_gauss(rng, (tried + k) % 2));
            DualStructure d;
            if (!theorem_one_dual(c.id, p, d)) continue;
            ++tried;
            ok += check_dual_jacobi(d).pass() && check_mixed_jacobi({A, d}).pass();
        }
        pass = pass && ok == samples;
        detail += (detail.empty() ? "" : ", ") + std::string("case ") + std::to_string(c.id) + " " + std::to_string(ok) +
                  "/" + std::to_string(samples);
    }
    return {4, "Theorem 1 cases", pass, detail, suite::seconds_since(t0)};
}

// 5. Dual rows: identities hold and no two rows are equivalent.
inline CriterionResult criterion_table3(const SuiteConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(cfg.seed + 5);
    auto rows = suite::table3_rows(*cfg.cat);
    int samples = std::max(5, cfg.samples);
    std::string fail;
    for (const auto& row : rows)
        for (int s = 0; s < samples; ++s) {
            Bindings b = sample_params(*row.sf, rng, row.choice);
            SuperBialgebra bi{build_algebra(*row.sf, b), build_dual(*row.sf, b)};
            bool ok = check_dual_jacobi(bi.dual).pass() && check_mixed_jacobi(bi).pass() && check_cocycle(bi).pass;
            if (!ok && fail.empty()) fail = row.label + " at " + suite::bindings_to_string(b);
        }
    SuperAlgebra base = build_algebra(cfg.cat->algebra("(C3+A)"), {});
    std::vector<DualStructure> fixed;
    for (const auto& row : rows) {
        Bindings at = suite::classify_point(*row.sf);
        for (const auto& [k, v] : row.choice) at[k] = v;
        fixed.push_back(build_dual(*row.sf, resolve_params(*row.sf, at)));
    }
    int by_inv = 0, by_search = 0, inconclusive = 0, found = 0;
    std::string found_pair;
    for (size_t i = 0; i < fixed.size(); ++i)
        for (size_t j = i + 1; j < fixed.size(); ++j) {
            auto res = classify_pair(fixed[i], fixed[j], base);
            switch (res.verdict) {
                case Equivalence::InequivalentByInvariant: ++by_inv; break;
                case Equivalence::InequivalentBySearch: ++by_search; break;
                case Equivalence::Inconclusive: ++inconclusive; break;
                case Equivalence::Found:
                    ++found;
                    if (found_pair.empty()) found_pair = rows[i].label + " ~ " + rows[j].label;
                    break;
            }
        }
    size_t pairs = fixed.size() * (fixed.size() - 1) / 2;
    bool pass = fail.empty() && rows.size() == 31 && inconclusive == 0 && found == 0;
    std::string detail = std::to_string(rows.size()) + " rows x " + std::to_string(samples) +
                         " samples " + (fail.empty() ? "pass dual/mixed Jacobi and cocycle" : "FAIL at " + fail) + "; " +
                         std::to_string(pairs) + " pairs: " + std::to_string(by_inv) + " separated by invariants, " +
                         std::to_string(by_search) + " by exhaustive search, " + std::to_string(found) + " equivalent" +
                         (found_pair.empty() ? "" : " (" + found_pair + ")") + ", " + std::to_string(inconclusive) +
                         " inconclusive";
    return {5, "dual rows and inequivalence", pass, detail, suite::seconds_since(t0)};
}

// 6. Coboundary rows: r-families, Schouten brackets and triangularity.
inline CriterionResult criterion_table4(const SuiteConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(cfg.seed + 6);
    int samples = std::max(10, cfg.samples);
    std::string fail;
    int runs = 0;
    auto note = [&](bool ok, const std::string& what) {
        if (!ok && fail.empty()) fail = what;
    };
    for (const auto& sf : cfg.cat->pairs) {
        const SourceFile& t3 = cfg.cat->dual(sf.meta.at("table3"));
        Matrix D = build_matrix(sf);
        auto fam_params = suite::params_in(sf, {"r", "rfamily"});
        auto dual_params = suite::params_in(sf, {"rdual", "rdualfamily"});
        for (const auto& combo : choice_combinations(sf))
            for (int s = 0; s <= samples; ++s) {
                Bindings fixed = combo;
                // one extra sample at the special point of the k-family
                if (s == samples) {
                    if (!sf.param("k")) continue;
                    fixed["k"] = Gauss(4);
                }
                Bindings b = sample_params(sf, rng, fixed);
                std::string where = sf.name + " at " + suite::bindings_to_string(b);
                ++runs;
                SuperAlgebra base = build_algebra(sf, b);
                DualStructure d = build_dual(sf, b);
                const Grading& g = base.grading;
                // link to the dual row in its own basis
                Bindings tb = b;
                if (sf.meta.count("table3_eps")) tb["eps"] = -b.at("eps");
                Bindings tb2 = resolve_params(t3, tb, true);
                SuperBialgebra moved = change_basis(SuperBialgebra{build_algebra(t3, tb2), build_dual(t3, tb2)}, D);
                note(moved.base.f == base.f && moved.dual == d, where + ": basis link");

                CoboundarySolution sol = solve_coboundary({base, d});
                int dim = suite::family_dimension(sf.rblock("rfamily"), 4, b, fam_params);
                note(sol.solvable && sol.dimension() == dim, where + ": family dimension " +
                                                                std::to_string(sol.dimension()) + " vs " + std::to_string(dim));
                Tensor2 rf = build_r(sf.rblock("rfamily"), 4, b);
                Tensor2 r = build_r(sf.rblock("r"), 4, b);
                note(sol.contains(rf), where + ": printed family member");
                note(is_super_skew(r, g) && sol.contains(r) && coboundary_delta(r, base) == d, where + ": printed skew r");
                note(schouten_bracket(r, base) == suite::wedge_block(sf.wblock("schouten"), g, b), where + ": [[r,r]]");
                note(schouten_bracket(rf, base) == suite::wedge_block(sf.wblock("schoutenfamily"), g, b),
                     where + ": [[r,r]] of the family");
                note(classify_triangularity(r, base) == suite::expected_verdict(sf.name, b, false), where + ": triangularity");
                if (!sf.has_block("rdual")) continue;
                SuperBialgebra sw = swap_roles({base, d});
                CoboundarySolution sd = solve_coboundary(sw);
                int ddim = suite::family_dimension(sf.rblock("rdualfamily"), 4, b, dual_params);
                Tensor2 rdf = build_r(sf.rblock("rdualfamily"), 4, b);
                Tensor2 rd = build_r(sf.rblock("rdual"), 4, b);
                note(sd.solvable && sd.dimension() == ddim, where + ": dual family dimension");
                note(sd.contains(rdf), where + ": printed dual family member");
                note(is_super_skew(rd, g) && sd.contains(rd), where + ": printed dual skew r");
                note(schouten_bracket(rd, sw.base) == suite::wedge_block(sf.wblock("schoutendual"), g, b), where + ": [[r~,r~]]");
                note(schouten_bracket(rdf, sw.base) == suite::wedge_block(sf.wblock("schoutendualfamily"), g, b),
                     where + ": [[r~,r~]] of the family");
                note(classify_triangularity(rd, sw.base) == suite::expected_verdict(sf.name, b, true),
                     where + ": dual triangularity");
            }
    }
    std::string detail = std::to_string(cfg.cat->pairs.size()) + " coboundary rows, " + std::to_string(runs) +
                         " parameter points: " + (fail.empty() ? "families, Schouten brackets and verdicts match" : "FAIL " + fail) +
                         "; row4 [[r,r]] is (k/2)(eps + k/4), half the tabulated k(eps + k/4) and equal to the general-family value at e1 = -k/2";
    return {6, "coboundary rows", fail.empty() && cfg.cat->pairs.size() == 4, detail, suite::seconds_since(t0)};
}

// 7. Only the four named rows are coboundary.
inline CriterionResult criterion_noncoboundary(const SuiteConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(cfg.seed + 7);
    std::set<std::string> named;
    for (const auto& sf : cfg.cat->pairs) named.insert(sf.meta.at("table3"));
    int samples = std::max(3, cfg.samples / 2);
    int solvable_rows = 0;
    std::string bad;
    for (const auto& row : suite::table3_rows(*cfg.cat)) {
        std::string name = row.sf->section_names.at("dual");
        bool expect = named.count(name) > 0;
        int solved = 0;
        for (int s = 0; s < samples; ++s) {
            Bindings b = sample_params(*row.sf, rng, row.choice);
            solved += solve_coboundary({build_algebra(*row.sf, b), build_dual(*row.sf, b)}).solvable;
        }
        if (solved == samples) ++solvable_rows;
        if ((expect && solved != samples) || (!expect && solved != 0))
            if (bad.empty()) bad = row.label + (expect ? " not solvable" : " solvable");
    }
    std::string detail = std::to_string(solvable_rows) + " solvable rows, all inside {" + [&] {
        std::string s;
        for (const auto& n : named) s += (s.empty() ? "" : ", ") + n;
        return s;
    }() + "}" + (bad.empty() ? "" : "; FAIL " + bad);
    return {7, "non-coboundary rows", bad.empty() && named.size() == 4, detail, suite::seconds_since(t0)};
}

// 8. Drinfeld doubles: super Jacobi and invariance of the pairing.
inline CriterionResult criterion_doubles(const SuiteConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(cfg.seed + 8);
    auto rows = suite::table3_rows(*cfg.cat);
    int ok = 0;
    std::string bad;
    for (const auto& row : rows) {
        Bindings b = sample_params(*row.sf, rng, row.choice);
        SuperBialgebra bi{build_algebra(*row.sf, b), build_dual(*row.sf, b)};
        SuperAlgebra D = drinfeld_double(bi);
        auto j = check_super_jacobi(D);
        auto a = check_antisymmetry(D);
        auto f = check_ad_invariance(D, double_pairing(bi.base.grading, true));
        bool good = j.pass && a.pass && f.pass && !f.degenerate && f.supersymmetric;
        ok += good;
        if (!good && bad.empty()) bad = row.label;
    }
    double sec = suite::seconds_since(t0);
    std::string detail = std::to_string(ok) + "/" + std::to_string(rows.size()) +
                         " doubles pass super Jacobi and pairing invariance, " + suite::fmt_seconds(sec) + " (limit 10 s)" +
                         (bad.empty() ? "" : "; FAIL " + bad);
    return {8, "Drinfeld doubles", bad.empty() && rows.size() == 31 && sec < 10.0, detail, sec};
}

// 9. Hopf axioms and central Casimirs of the three deformations.
inline CriterionResult criterion_hopf(const SuiteConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::string detail;
    for (const char* name : {"prop4", "prop5", "prop6"}) {
        HopfDeformation d = make_deformation(name, cfg.order);
        HopfReport h = check_hopf_axioms(d);
        CasimirReport c = check_casimir_central(d);
        pass = pass && h.pass() && c.pass();
        std::string part = std::string(name) + " " + std::to_string(h.checks.size()) + " axiom checks " +
                           (h.pass() ? "pass" : "FAIL") + ", Casimir " + (c.pass() ? "central" : "NOT central");
        if (auto* f = h.first_failure()) part += " (" + f->axiom + " on " + f->subject + " at order " + std::to_string(f->first_failing_order) + ")";
        detail += (detail.empty() ? "" : "; ") + part;
    }
    detail += "; order " + std::to_string(cfg.order);
    return {9, "Hopf superalgebras", pass, detail, suite::seconds_since(t0)};
}

namespace suite {

// 2 q1^2 p2^2 - 2 q1 p2 xi1 pi2 + q1^2 pi1 pi2, assembled from coordinates.
inline SuperFunction expected_realized_casimir(int N) {
    auto q1 = SuperFunction::boson(N, Boson::q1), p2 = SuperFunction::boson(N, Boson::p2);
    auto xi1 = SuperFunction::fermion(N, Fermion::xi1), pi1 = SuperFunction::fermion(N, Fermion::pi1),
         pi2 = SuperFunction::fermion(N, Fermion::pi2);
    return (q1 * q1 * p2 * p2).scaled(Gauss(2)) - (q1 * p2 * xi1 * pi2).scaled(Gauss(2)) + q1 * q1 * pi1 * pi2;
}

inline std::string canonical_failure() {
    std::vector<SuperFunction> x;
    for (int i = 0; i < 4; ++i) x.push_back(SuperFunction::boson(0, static_cast<Boson>(i)));
    for (int i = 0; i < 4; ++i) x.push_back(SuperFunction::fermion(0, static_cast<Fermion>(i)));
    static const char* names[] = {"q1", "q2", "p1", "p2", "xi1", "xi2", "pi1", "pi2"};
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int want = 0;
            if (a < 2 && b == a + 2) want = 1;
            if (a >= 2 && a < 4 && b == a - 2) want = -1;
            if (a >= 4 && a < 6 && b == a + 2) want = 1;
            if (a >= 6 && b == a - 2) want = 1;
            if (!(poisson_bracket(x[a], x[b]) == SuperFunction::constant(0, Gauss(want)) ||
                  (want == 0 && poisson_bracket(x[a], x[b]).is_zero())))
                return std::string("{") + names[a] + "," + names[b] + "}";
        }
    return "";
}

}  // namespace suite

// 10. Phase superspace realizations and involution.
inline CriterionResult criterion_phase(const SuiteConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    int N = cfg.order;
    std::vector<std::pair<std::string, bool>> parts;
    parts.push_back({"canonical brackets", suite::canonical_failure().empty()});
    Realization R = classical_realization(0);
    parts.push_back({"undeformed closure", check_realization_closure(R, undeformed_relations(0)).pass()});
    Realization Dr = deformed_realization(N);
    parts.push_back({"deformed closure to order " + std::to_string(N), check_realization_closure(Dr, deformed_relations(N)).pass()});
    UElement C0 = classical_casimir(undeformed_relations(0));
    parts.push_back({"realized Casimir", casimir_realized(R, C0) == suite::expected_realized_casimir(0)});
    SuperFunction H = hamiltonian(R, C0, Poly1::monomial(2, Gauss(1)));
    bool inv = check_involution(H, generator_images(R)).pass() &&
               check_involution(casimir_realized(R, C0), generator_images(R)).pass();
    parts.push_back({"undeformed involution", inv});
    HopfDeformation d4 = make_deformation("prop4", N);
    SuperFunction Hd = hamiltonian(Dr, d4.casimir, Poly1::monomial(2, Gauss(1)));
    bool dinv = check_involution(Hd, generator_images(Dr)).pass() &&
                casimir_realized(Dr, d4.casimir).at_order(0) == suite::expected_realized_casimir(N);
    parts.push_back({"deformed involution", dinv});
    bool pass = true;
    std::string detail;
    for (const auto& [n, ok] : parts) {
        pass = pass && ok;
        detail += (detail.empty() ? "" : ", ") + n + (ok ? " ok" : " FAIL");
    }
    return {10, "phase superspace", pass, detail, suite::seconds_since(t0)};
}

namespace suite {

// Random grading-allowed dual structure with small integer entries.
inline DualStructure random_dual(std::mt19937_64& rng) {
    Grading g = Grading::standard22();
    DualStructure d("random", g);
    std::uniform_int_distribution<int> coef(-2, 2), keep(0, 3);
    for (const auto& u : dual_unknowns(g))
        if (keep(rng) == 0) d.set(u.i, u.j, u.k, Gauss(coef(rng)));
    return d;
}

}  // namespace suite

// 11. Property suite.
inline CriterionResult criterion_properties(const SuiteConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(cfg.seed + 11);
    int leibniz = 0, jacobi = 0;
    for (int t = 0; t < 200; ++t) {
        int a = static_cast<int>(rng() % 2), b = static_cast<int>(rng() % 2), c = static_cast<int>(rng() % 2);
        SuperFunction F = random_superfunction(rng, a), G = random_superfunction(rng, b), K = random_superfunction(rng, c);
        SuperFunction lhs = poisson_bracket(F, G * K);
        SuperFunction rhs = poisson_bracket(F, G) * K + (G * poisson_bracket(F, K)).scaled(Gauss(psign(a * b)));
        leibniz += lhs == rhs;
        jacobi += poisson_jacobi_sum(F, G, K).is_zero();
    }
    int confluent = 0;
    std::vector<HopfDeformation> defs;
    for (const char* n : {"prop4", "prop5", "prop6"}) defs.push_back(make_deformation(n, cfg.order));
    for (int t = 0; t < 200; ++t) {
        const HopfDeformation& d = defs[static_cast<size_t>(t) % defs.size()];
        WordRewriter w{d.alg.phi(), d.N};
        std::vector<Gen> word;
        int len = 1 + static_cast<int>(rng() % 6);
        for (int k = 0; k < len; ++k) word.push_back(all_gens[rng() % 4]);
        UElement once = w.normalize(word, rng), twice = w.normalize(word, rng);
        confluent += once == twice && once == d.alg.word(word);
    }
    SuperAlgebra base = build_algebra(cfg.cat->algebra("(C3+A)"), {});
    int agree = 0, passing = 0;
    for (int t = 0; t < 100; ++t) {
        DualStructure d;
        if (t % 2 == 0) {
            auto cases = theorem_one_cases();
            const auto& c = cases[static_cast<size_t>(t / 2) % cases.size()];
            std::vector<Gauss> p;
            do {
                p.clear();
                for (size_t k = 0; k < c.params.size(); ++k) p.push_back(suite::random_gauss(rng, k % 2));
            } while (!theorem_one_dual(c.id, p, d));
        } else {
            d = suite::random_dual(rng);
        }
        auto dj = check_dual_jacobi(d);
        auto mj = check_mixed_jacobi({base, d});
        agree += dj.agree() && mj.agree();
        passing += dj.pass() && mj.pass();
    }
    bool pass = leibniz == 200 && jacobi == 200 && confluent == 200 && agree == 100;
    std::string detail = "Leibniz " + std::to_string(leibniz) + "/200, Jacobi " + std::to_string(jacobi) +
                         "/200, confluence " + std::to_string(confluent) + "/200, tensor vs matrix " +
                         std::to_string(agree) + "/100 (" + std::to_string(passing) + " of them bialgebras)";
    return {11, "property suite", pass, detail, suite::seconds_since(t0)};
}

using Criterion = std::function<CriterionResult(const SuiteConfig&)>;

inline std::vector<Criterion> all_criteria() {
    return {criterion_catalog, criterion_adjoint,     criterion_automorphisms, criterion_theorem1,
            criterion_table3,  criterion_table4,      criterion_noncoboundary, criterion_doubles,
            criterion_hopf,    criterion_phase,       criterion_properties};
}

// Runs one criterion, turning exceptions into failures.
inline CriterionResult run_criterion(const Criterion& c, const SuiteConfig& cfg, int id) {
    try {
        return c(cfg);
    } catch (const std::exception& e) {
        return {id, "criterion " + std::to_string(id), false, std::string("error: ") + e.what(), 0};
    }
}

}  // namespace sba
