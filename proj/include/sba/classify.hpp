#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "automorphism.hpp"

namespace sba {

// ---------------------------------------------------------------------------
// Invariant fingerprint of a dual structure. Every entry is an isomorphism
// invariant of the dual superalgebra under parity-preserving basis change,
// hence unchanged by transport along any automorphism of the base.

struct Fingerprint {
    std::vector<int> v;
    std::vector<std::string> labels;
    friend bool operator==(const Fingerprint& a, const Fingerprint& b) { return a.v == b.v; }
    int first_difference(const Fingerprint& o) const {
        for (size_t k = 0; k < v.size(); ++k)
            if (v[k] != o.v[k]) return static_cast<int>(k);
        return -1;
    }
};

namespace detail {

inline int span_dim(const std::vector<std::vector<Gauss>>& vecs, int n) {
    if (vecs.empty()) return 0;
    Matrix M(static_cast<int>(vecs.size()), n);
    for (int r = 0; r < M.rows; ++r)
        for (int c = 0; c < n; ++c) M(r, c) = vecs[r][c];
    return rank(M);
}

// Row basis of a span, split by parity when the subspace is graded.
inline std::vector<std::vector<Gauss>> span_basis(const std::vector<std::vector<Gauss>>& vecs, int n) {
    if (vecs.empty()) return {};
    Matrix M(static_cast<int>(vecs.size()), n);
    for (int r = 0; r < M.rows; ++r)
        for (int c = 0; c < n; ++c) M(r, c) = vecs[r][c];
    Rref R = rref(M);
    std::vector<std::vector<Gauss>> out;
    for (size_t r = 0; r < R.pivots.size(); ++r) {
        std::vector<Gauss> row(n);
        for (int c = 0; c < n; ++c) row[c] = R.m(static_cast<int>(r), c);
        out.push_back(std::move(row));
    }
    return out;
}

inline std::vector<Gauss> restrict_parity(const std::vector<Gauss>& v, const Grading& g, int p) {
    std::vector<Gauss> r(v.size());
    for (size_t k = 0; k < v.size(); ++k)
        if (g[static_cast<int>(k)] == p) r[k] = v[k];
    return r;
}

inline bool nonzero_vec(const std::vector<Gauss>& v) {
    return std::any_of(v.begin(), v.end(), [](const Gauss& x) { return !x.is_zero(); });
}

// [U, W] for graded subspaces given by homogeneous spanning sets.
inline std::vector<std::vector<Gauss>> bracket_span(const SuperAlgebra& A, const std::vector<std::vector<Gauss>>& U,
                                                    const std::vector<std::vector<Gauss>>& W) {
    std::vector<std::vector<Gauss>> out;
    for (const auto& u : U)
        for (const auto& w : W) {
            auto b = A.bracket(u, w);
            if (nonzero_vec(b)) out.push_back(std::move(b));
        }
    return out;
}

// Homogeneous spanning set of a graded subspace.
inline std::vector<std::vector<Gauss>> homogeneous(const std::vector<std::vector<Gauss>>& vecs, const Grading& g) {
    std::vector<std::vector<Gauss>> out;
    for (const auto& v : vecs)
        for (int p = 0; p < 2; ++p) {
            auto r = restrict_parity(v, g, p);
            if (nonzero_vec(r)) out.push_back(std::move(r));
        }
    return span_basis(out, g.size());
}

inline std::pair<int, int> superdim(const std::vector<std::vector<Gauss>>& vecs, const Grading& g) {
    auto h = homogeneous(vecs, g);
    int e = 0, o = 0;
    for (const auto& v : h) {
        std::vector<std::vector<Gauss>> ev{restrict_parity(v, g, 0)};
        (nonzero_vec(ev[0]) ? e : o)++;
    }
    return {e, o};
}

}  // namespace detail

inline Fingerprint fingerprint(const SuperAlgebra& A) {
    Fingerprint fp;
    const Grading& g = A.grading;
    int n = A.n;
    auto push = [&](const std::string& l, int x) {
        fp.labels.push_back(l);
        fp.v.push_back(x);
    };
    std::vector<std::vector<Gauss>> even, odd, all;
    for (int i = 0; i < n; ++i) {
        (g[i] ? odd : even).push_back(A.basis(i));
        all.push_back(A.basis(i));
    }
    push("dim[B,B]", detail::span_dim(detail::bracket_span(A, even, even), n));
    push("dim[B,F]", detail::span_dim(detail::bracket_span(A, even, odd), n));
    push("dim[F,F]", detail::span_dim(detail::bracket_span(A, odd, odd), n));
    // derived and lower central series
    auto cur = all;
    for (int s = 0; s < 3; ++s) {
        cur = detail::homogeneous(detail::bracket_span(A, cur, cur), g);
        auto [e, o] = detail::superdim(cur, g);
        push("derived" + std::to_string(s + 1) + ".even", e);
        push("derived" + std::to_string(s + 1) + ".odd", o);
    }
    cur = all;
    for (int s = 0; s < 3; ++s) {
        cur = detail::homogeneous(detail::bracket_span(A, all, cur), g);
        auto [e, o] = detail::superdim(cur, g);
        push("lower" + std::to_string(s + 1) + ".even", e);
        push("lower" + std::to_string(s + 1) + ".odd", o);
    }
    // center: x with [x, X_j] = 0 for all j, solved per parity
    for (int p = 0; p < 2; ++p) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (g[i] == p) idx.push_back(i);
        Matrix M(n * n, static_cast<int>(idx.size()));
        for (size_t c = 0; c < idx.size(); ++c)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) M(j * n + k, static_cast<int>(c)) = A(k, idx[c], j);
        push(p ? "center.odd" : "center.even", static_cast<int>(idx.size()) - rank(M));
    }
    // even derivations D (block diagonal): D[x,y] = [Dx,y] + [x,Dy]
    {
        std::vector<std::pair<int, int>> unk;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (g[i] == g[j]) unk.push_back({i, j});  // D(X_i) = sum D_{ij} X_j
        Matrix M(n * n * n, static_cast<int>(unk.size()));
        for (size_t u = 0; u < unk.size(); ++u) {
            auto [p, q] = unk[u];
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k) {
                        Gauss v;
                        // D[X_i,X_j] component k
                        if (q == k) v += A(p, i, j);
                        // [D X_i, X_j] + [X_i, D X_j]
                        if (p == i) v -= A(k, q, j);
                        if (p == j) v -= A(k, i, q);
                        M((i * n + j) * n + k, static_cast<int>(u)) += v;
                    }
        }
        push("even derivations", static_cast<int>(unk.size()) - rank(M));
    }
    return fp;
}

inline Fingerprint fingerprint(const DualStructure& d) { return fingerprint(d.as_algebra()); }

// ---------------------------------------------------------------------------
// Exact search for an automorphism of the (C3+A) family relating two duals.

enum class Equivalence { Found, InequivalentByInvariant, InequivalentBySearch, Inconclusive };

inline const char* to_string(Equivalence e) {
    switch (e) {
        case Equivalence::Found: return "equivalent";
        case Equivalence::InequivalentByInvariant: return "inequivalent-by-invariant";
        case Equivalence::InequivalentBySearch: return "inequivalent-by-search";
        case Equivalence::Inconclusive: return "inconclusive";
    }
    return "?";
}

struct EquivalenceResult {
    Equivalence verdict = Equivalence::Inconclusive;
    std::optional<Matrix> witness;
    std::string detail;
    std::map<std::string, Gauss> params;  // a, b, c, d of the witness
};

namespace detail {

// Real and imaginary parts of a polynomial with Gaussian coefficients.
inline std::pair<Poly, Poly> split_re_im(const Poly& p) {
    Poly re, im;
    for (const auto& [m, c] : p.terms) {
        re.add_term(m, Gauss(c.re));
        im.add_term(m, Gauss(c.im));
    }
    return {re, im};
}

inline bool only_ab(const Poly& p) {
    for (const auto& v : p.variables())
        if (v != "a" && v != "b") return false;
    return true;
}

inline std::optional<mpz_class> int_root(const mpz_class& x, unsigned long k) {
    if (x < 0) return std::nullopt;
    mpz_class r;
    if (mpz_root(r.get_mpz_t(), x.get_mpz_t(), k) == 0) return std::nullopt;
    return r;
}

// Positive rational k-th root of q > 0, when it exists.
inline std::optional<Rational> rational_root(const Rational& q, long k) {
    if (q <= 0) return std::nullopt;
    if (k < 0) return rational_root(Rational(1) / q, -k);
    if (k == 0) return std::nullopt;
    auto n = int_root(q.get_num(), static_cast<unsigned long>(k));
    auto d = int_root(q.get_den(), static_cast<unsigned long>(k));
    if (!n || !d) return std::nullopt;
    Rational r(*n, *d);
    r.canonicalize();
    return r;
}

inline Rational rpow(const Rational& x, long e) {
    Rational r(1);
    Rational b = e < 0 ? Rational(1) / x : x;
    for (long k = 0; k < std::labs(e); ++k) r *= b;
    return r;
}

struct Binomial {
    long u, v;     // exponent of a, b in m1/m2
    Rational gamma;  // m1/m2 = gamma
};

enum class ToricOutcome { NoSolution, Witness, NoRationalWitness };

// Solves a^{u_i} b^{v_i} = gamma_i over nonzero reals, looking for a rational witness.
inline ToricOutcome solve_toric(const std::vector<Binomial>& rows, Rational& a, Rational& b) {
    for (const auto& r : rows)
        if (r.u == 0 && r.v == 0 && r.gamma != 1) return ToricOutcome::NoSolution;
    // signs
    std::vector<std::pair<int, int>> signs;
    for (int sa : {1, -1})
        for (int sb : {1, -1}) {
            bool ok = true;
            for (const auto& r : rows) {
                int s = psign(static_cast<int>(std::labs(r.u) & 1) * (sa < 0)) *
                        psign(static_cast<int>(std::labs(r.v) & 1) * (sb < 0));
                if (s != sgn(r.gamma)) ok = false;
            }
            if (ok) signs.push_back({sa, sb});
        }
    if (signs.empty()) return ToricOutcome::NoSolution;
    // magnitudes: integer left kernel of the exponent matrix must give |gamma| products equal to 1
    if (!rows.empty()) {
        Matrix E(2, static_cast<int>(rows.size()));
        for (size_t i = 0; i < rows.size(); ++i) {
            E(0, static_cast<int>(i)) = Gauss(Rational(rows[i].u));
            E(1, static_cast<int>(i)) = Gauss(Rational(rows[i].v));
        }
        for (const auto& kv : nullspace(E)) {
            mpz_class l = 1;
            for (const auto& x : kv) l = lcm(l, x.re.get_den());
            Rational prod(1);
            for (size_t i = 0; i < rows.size(); ++i) {
                Rational m = kv[i].re * Rational(l);
                prod *= rpow(abs(rows[i].gamma), m.get_num().get_si());
            }
            if (prod != 1) return ToricOutcome::NoSolution;
        }
    }
    // rational witness: scan small candidates for one unknown, solve the other
    std::vector<Rational> cands{Rational(1)};
    for (int p = 2; p <= 7; ++p)
        for (int q = 1; q <= 7; ++q) {
            Rational x(p, q);
            x.canonicalize();
            cands.push_back(x);
            cands.push_back(Rational(1) / x);
        }
    auto satisfied = [&](const Rational& A, const Rational& B) {
        for (const auto& r : rows)
            if (rpow(A, r.u) * rpow(B, r.v) != r.gamma) return false;
        return true;
    };
    for (auto [sa, sb] : signs)
        for (const auto& cb : cands) {
            Rational B = cb * sb;
            // pick a from the first row involving a, else try candidates
            std::optional<Rational> A;
            for (const auto& r : rows)
                if (r.u != 0) {
                    Rational t = abs(r.gamma / rpow(B, r.v));
                    if (auto root = rational_root(t, r.u)) A = *root * sa;
                    break;
                }
            std::vector<Rational> tries;
            if (A) tries.push_back(*A);
            else
                for (const auto& ca : cands) tries.push_back(ca * sa);
            for (const auto& t : tries)
                if (satisfied(t, B)) {
                    a = t;
                    b = B;
                    return ToricOutcome::Witness;
                }
        }
    return ToricOutcome::NoRationalWitness;
}

struct SearchState {
    std::vector<Poly> eqs;
    std::map<std::string, Poly> solved;  // c, d in terms of a, b and the other
};

}  // namespace detail

// Symbolic (C3+A) family member and its inverse over Laurent polynomials.
inline std::vector<std::vector<Poly>> c3a_symbolic() {
    Poly a = Poly::var("a"), b = Poly::var("b"), c = Poly::var("c"), d = Poly::var("d");
    std::vector<std::vector<Poly>> A(4, std::vector<Poly>(4));
    A[0][0] = a;
    A[0][1] = c;
    A[1][1] = b * b;
    A[2][2] = a * b;
    A[3][2] = d;
    A[3][3] = b;
    return A;
}

inline std::vector<std::vector<Poly>> c3a_symbolic_inverse() {
    Poly a = Poly::var("a"), b = Poly::var("b"), c = Poly::var("c"), d = Poly::var("d");
    std::vector<std::vector<Poly>> R(4, std::vector<Poly>(4));
    R[0][0] = Poly::var("a", -1);
    R[0][1] = -(c * Poly::var("a", -1) * Poly::var("b", -2));
    R[1][1] = Poly::var("b", -2);
    R[2][2] = Poly::var("a", -1) * Poly::var("b", -1);
    R[3][2] = -(d * Poly::var("a", -1) * Poly::var("b", -2));
    R[3][3] = Poly::var("b", -1);
    return R;
}

// Checks that the automorphism family of the base has the (C3+A) shape.
inline bool has_c3a_family(const SuperAlgebra& base) {
    if (base.n != 4 || !(base.grading == Grading::standard22())) return false;
    auto fam = solve_automorphism_family(base);
    if (fam.stalled || fam.inconsistent) return false;
    auto sym = c3a_symbolic();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Poly p = fam.pattern[i][j].substitute("A11", Poly::var("a"))
                         .substitute("A44", Poly::var("b"))
                         .substitute("A12", Poly::var("c"))
                         .substitute("A43", Poly::var("d"));
            if (p != sym[i][j]) return false;
        }
    return true;
}

inline EquivalenceResult equivalence_search(const DualStructure& d1, const DualStructure& d2,
                                            const SuperAlgebra& base) {
    if (!has_c3a_family(base)) throw std::invalid_argument("equivalence_search: base does not carry the (C3+A) family");
    EquivalenceResult res;
    int n = 4;
    auto A = c3a_symbolic();
    auto R = c3a_symbolic_inverse();
    struct PolyView {
        const DualStructure& d;
        Poly operator()(int a, int b, int c) const { return Poly(d(a, b, c)); }
        bool is_zero_at(int a, int b, int c) const { return d(a, b, c).is_zero(); }
    };
    auto t = transform_dual_entries<Poly>(
        n, [&](int i, int j) { return A[i][j]; }, [&](int i, int j) { return R[i][j]; }, PolyView{d1});
    detail::SearchState st;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Poly e = t[(static_cast<size_t>(i) * n + j) * n + k] - Poly(d2(i, j, k));
                auto [re, im] = detail::split_re_im(e);
                for (const Poly& p : {re, im})
                    if (!p.is_zero()) st.eqs.push_back(p);
            }

    bool inconclusive = false;
    std::string why;
    // depth-first over the branches created by products c*d = 0
    std::vector<detail::SearchState> stack{st};
    while (!stack.empty()) {
        detail::SearchState s = std::move(stack.back());
        stack.pop_back();
        bool dead = false, branched = false, stuck = false;
        for (int guard = 0; guard < 100 && !dead && !branched && !stuck; ++guard) {
            std::vector<Poly> eqs;
            for (auto& e : s.eqs) {
                Poly p = e;
                for (const auto& [v, val] : s.solved) p = p.substitute(v, val);
                if (p.is_zero()) continue;
                if (p.is_constant()) { dead = true; break; }
                eqs.push_back(p);
            }
            if (dead) break;
            s.eqs = eqs;
            bool changed = false;
            for (const auto& e : eqs) {
                if (!e.is_monomial()) continue;
                const auto& m = e.terms.begin()->first;
                bool hc = m.count("c"), hd = m.count("d");
                if (!hc && !hd) { dead = true; break; }  // a, b are nonzero
                if (hc && hd) {
                    for (const char* v : {"c", "d"}) {
                        detail::SearchState br = s;
                        br.solved[v] = Poly();
                        stack.push_back(std::move(br));
                    }
                    branched = true;
                    break;
                }
                s.solved[hc ? "c" : "d"] = Poly();
                changed = true;
                break;
            }
            if (dead || branched) break;
            if (changed) continue;
            for (const auto& e : eqs) {
                for (const char* v : {"c", "d"}) {
                    if (e.degree_in(v) != 1 || e.min_degree_in(v) < 0) continue;
                    auto co = e.coefficients_in(v);
                    const Poly& c1 = co[1];
                    if (!c1.is_monomial() || !detail::only_ab(c1)) continue;
                    Poly val = *(-(e - c1 * Poly::var(v))).div_monomial(c1);
                    for (auto& [w, old] : s.solved) old = old.substitute(v, val);
                    s.solved[v] = val;
                    changed = true;
                    break;
                }
                if (changed) break;
            }
            if (changed) continue;
            // only a and b remain?
            std::vector<detail::Binomial> rows;
            for (const auto& e : eqs) {
                if (!detail::only_ab(e) || e.terms.size() != 2) { stuck = true; break; }
                auto it = e.terms.begin();
                auto [m1, c1] = *it;
                ++it;
                auto [m2, c2] = *it;
                auto ex = [](const Poly::Mono& m, const char* x) {
                    auto f = m.find(x);
                    return f == m.end() ? 0L : static_cast<long>(f->second);
                };
                if (!c1.is_real() || !c2.is_real()) { stuck = true; break; }
                rows.push_back({ex(m1, "a") - ex(m2, "a"), ex(m1, "b") - ex(m2, "b"), -(c2.re / c1.re)});
            }
            if (stuck) {
                why = "nonbinomial residual system";
                break;
            }
            Rational ra, rb;
            auto out = detail::solve_toric(rows, ra, rb);
            if (out == detail::ToricOutcome::NoSolution) { dead = true; break; }
            if (out == detail::ToricOutcome::NoRationalWitness) {
                stuck = true;
                why = "real solution exists but no rational witness was found";
                break;
            }
            std::map<std::string, Gauss> env{{"a", Gauss(ra)}, {"b", Gauss(rb)}};
            for (const char* v : {"c", "d"})
                if (!s.solved.count(v)) env[v] = Gauss();
            for (const char* v : {"c", "d"})
                if (s.solved.count(v)) env[v] = s.solved[v].evaluate(env);
            Matrix W = c3a_family_member(env["a"], env["b"], env["c"], env["d"]);
            if (!env["c"].is_real() || !env["d"].is_real()) {
                stuck = true;
                why = "witness is not real";
                break;
            }
            if (is_automorphism(W, base).pass && transform_dual(W, d1) == d2) {
                res.verdict = Equivalence::Found;
                res.witness = W;
                res.params = env;
                res.detail = "a=" + to_string(env["a"]) + " b=" + to_string(env["b"]) + " c=" + to_string(env["c"]) +
                             " d=" + to_string(env["d"]);
                return res;
            }
            stuck = true;
            why = "witness failed verification";
        }
        if (stuck) inconclusive = true;
    }
    if (!inconclusive) {
        res.verdict = Equivalence::InequivalentBySearch;
        res.detail = "no automorphism in the family satisfies the transport equations";
        return res;
    }
    Fingerprint f1 = fingerprint(d1), f2 = fingerprint(d2);
    if (!(f1 == f2)) {
        int k = f1.first_difference(f2);
        res.verdict = Equivalence::InequivalentByInvariant;
        res.detail = f1.labels[k] + ": " + std::to_string(f1.v[k]) + " vs " + std::to_string(f2.v[k]);
        return res;
    }
    res.verdict = Equivalence::Inconclusive;
    res.detail = why;
    return res;
}

// Same decision, with the cheap fingerprint comparison first.
inline EquivalenceResult classify_pair(const DualStructure& d1, const DualStructure& d2, const SuperAlgebra& base) {
    Fingerprint f1 = fingerprint(d1), f2 = fingerprint(d2);
    if (!(f1 == f2)) {
        int k = f1.first_difference(f2);
        EquivalenceResult r;
        r.verdict = Equivalence::InequivalentByInvariant;
        r.detail = f1.labels[k] + ": " + std::to_string(f1.v[k]) + " vs " + std::to_string(f2.v[k]);
        return r;
    }
    return equivalence_search(d1, d2, base);
}

}  // namespace sba
