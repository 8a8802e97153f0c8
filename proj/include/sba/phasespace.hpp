#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hopf.hpp"

namespace sba {

// Coordinates of R^{4|4}: bosonic q1 q2 p1 p2, Grassmann xi1 xi2 pi1 pi2.
enum class Boson { q1 = 0, q2 = 1, p1 = 2, p2 = 3 };
enum class Fermion { xi1 = 0, xi2 = 1, pi1 = 2, pi2 = 3 };

// Bosonic exponents plus a Grassmann subset, stored in xi1 < xi2 < pi1 < pi2 order.
struct PhaseKey {
    std::array<int, 4> e{0, 0, 0, 0};
    std::uint8_t g = 0;
    int parity() const { return std::popcount(static_cast<unsigned>(g)) & 1; }
    auto operator<=>(const PhaseKey&) const = default;
};

struct SuperFunction {
    int N = 0;
    std::map<PhaseKey, LambdaSeries> terms;

    SuperFunction() = default;
    explicit SuperFunction(int order) : N(order) {}

    static SuperFunction constant(int order, const Gauss& c) {
        SuperFunction f(order);
        f.add({}, LambdaSeries(order, c));
        return f;
    }
    static SuperFunction boson(int order, Boson b, int power = 1) {
        PhaseKey k;
        k.e[static_cast<int>(b)] = power;
        SuperFunction f(order);
        f.add(k, LambdaSeries(order, Gauss(1)));
        return f;
    }
    static SuperFunction fermion(int order, Fermion x) {
        PhaseKey k;
        k.g = static_cast<std::uint8_t>(1u << static_cast<int>(x));
        SuperFunction f(order);
        f.add(k, LambdaSeries(order, Gauss(1)));
        return f;
    }
    // sum_k lambda^k f_k(u) with u = q1 p2
    static SuperFunction of_u(const PolySeries& s) {
        SuperFunction f(s.order());
        for (int k = 0; k <= s.order(); ++k)
            for (int m = 0; m <= s[k].degree(); ++m) {
                if (s[k].at(m).is_zero()) continue;
                LambdaSeries c(s.order());
                c[k] = s[k].at(m);
                PhaseKey key;
                key.e[0] = m;
                key.e[3] = m;
                f.add(key, c);
            }
        return f;
    }

    void add(const PhaseKey& k, const LambdaSeries& s) {
        if (s.is_zero()) return;
        auto it = terms.find(k);
        if (it == terms.end()) {
            terms.emplace(k, s);
            return;
        }
        it->second += s;
        if (it->second.is_zero()) terms.erase(it);
    }
    SuperFunction& operator+=(const SuperFunction& o) {
        for (const auto& [k, s] : o.terms) add(k, s);
        return *this;
    }
    SuperFunction& operator-=(const SuperFunction& o) {
        for (const auto& [k, s] : o.terms) add(k, -s);
        return *this;
    }
    friend SuperFunction operator+(SuperFunction a, const SuperFunction& b) { return a += b; }
    friend SuperFunction operator-(SuperFunction a, const SuperFunction& b) { return a -= b; }
    SuperFunction scaled(const LambdaSeries& s) const {
        SuperFunction r(N);
        for (const auto& [k, c] : terms) r.add(k, c * s);
        return r;
    }
    SuperFunction scaled(const Gauss& g) const { return scaled(LambdaSeries(N, g)); }
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const SuperFunction& a, const SuperFunction& b) { return a.terms == b.terms; }

    // 0 or 1 for homogeneous functions, -1 when mixed; zero counts as even.
    int parity() const {
        int p = -2;
        for (const auto& [k, s] : terms) {
            if (p == -2) p = k.parity();
            else if (p != k.parity()) return -1;
        }
        return p == -2 ? 0 : p;
    }
    SuperFunction part(int parity) const {
        SuperFunction r(N);
        for (const auto& [k, s] : terms)
            if (k.parity() == parity) r.add(k, s);
        return r;
    }
    SuperFunction at_order(int k) const {
        SuperFunction r(N);
        for (const auto& [key, s] : terms) {
            if (s[k].is_zero()) continue;
            LambdaSeries t(N);
            t[0] = s[k];
            r.add(key, t);
        }
        return r;
    }
    int lowest_order() const {
        int best = -1;
        for (const auto& [k, s] : terms) {
            int o = sba::lowest_order(s);
            if (o >= 0 && (best < 0 || o < best)) best = o;
        }
        return best;
    }
};

inline std::string to_string(const PhaseKey& k) {
    static const char* bn[] = {"q1", "q2", "p1", "p2"};
    static const char* fn[] = {"xi1", "xi2", "pi1", "pi2"};
    std::string s;
    for (int i = 0; i < 4; ++i) {
        if (k.e[i] == 0) continue;
        if (!s.empty()) s += " ";
        s += bn[i];
        if (k.e[i] > 1) s += "^" + std::to_string(k.e[i]);
    }
    for (int i = 0; i < 4; ++i)
        if (k.g & (1u << i)) {
            if (!s.empty()) s += " ";
            s += fn[i];
        }
    return s;
}

inline std::string to_string(const SuperFunction& f) {
    if (f.terms.empty()) return "0";
    std::string out;
    for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {
        const auto& [k, s] = *it;
        std::string mono = to_string(k);
        std::string c = series_to_string(s);
        bool simple = lowest_order(s) == 0 && s.order() >= 0 && [&] {
            for (int j = 1; j <= s.order(); ++j)
                if (!s[j].is_zero()) return false;
            return true;
        }();
        std::string term;
        if (simple && s[0].is_real()) {
            Rational v = s[0].re;
            bool neg = sgn(v) < 0;
            Rational a = neg ? Rational(-v) : v;
            std::string as = a == 1 && !mono.empty() ? "" : to_string(Gauss(a)) + (mono.empty() ? "" : " ");
            term = std::string(neg ? "-" : "") + as + mono;
        } else {
            term = "(" + c + ")" + (mono.empty() ? "" : " " + mono);
        }
        if (out.empty()) out = term;
        else if (term[0] == '-') out += " - " + term.substr(1);
        else out += " + " + term;
    }
    return out;
}

// Graded-commutative product.
inline SuperFunction operator*(const SuperFunction& a, const SuperFunction& b) {
    SuperFunction r(std::max(a.N, b.N));
    for (const auto& [ka, sa] : a.terms)
        for (const auto& [kb, sb] : b.terms) {
            if (ka.g & kb.g) continue;
            int swaps = 0;
            for (int i = 0; i < 4; ++i)
                if (kb.g & (1u << i)) swaps += std::popcount(static_cast<unsigned>(ka.g) >> (i + 1));
            PhaseKey k;
            for (int i = 0; i < 4; ++i) k.e[i] = ka.e[i] + kb.e[i];
            k.g = ka.g | kb.g;
            r.add(k, (sa * sb).scaled(Gauss(psign(swaps))));
        }
    return r;
}

inline SuperFunction pow(const SuperFunction& f, int e) {
    SuperFunction r = SuperFunction::constant(f.N, Gauss(1));
    for (int k = 0; k < e; ++k) r = r * f;
    return r;
}

inline SuperFunction d_boson(const SuperFunction& f, Boson b) {
    int i = static_cast<int>(b);
    SuperFunction r(f.N);
    for (const auto& [k, s] : f.terms) {
        if (k.e[i] == 0) continue;
        PhaseKey k2 = k;
        --k2.e[i];
        r.add(k2, s.scaled(Gauss(k.e[i])));
    }
    return r;
}

// Left derivative: move the variable to the front, then strip it.
inline SuperFunction d_left(const SuperFunction& f, Fermion x) {
    unsigned bit = 1u << static_cast<int>(x);
    SuperFunction r(f.N);
    for (const auto& [k, s] : f.terms) {
        if (!(k.g & bit)) continue;
        int before = std::popcount(static_cast<unsigned>(k.g) & (bit - 1));
        PhaseKey k2 = k;
        k2.g = static_cast<std::uint8_t>(k.g & ~bit);
        r.add(k2, s.scaled(Gauss(psign(before))));
    }
    return r;
}

// {F,G} = sum_mu (dF/dq dG/dp - dF/dp dG/dq) - (-1)^{|F|} sum_a (dF/dxi dG/dpi + dF/dpi dG/dxi)
inline SuperFunction poisson_bracket(const SuperFunction& F, const SuperFunction& G) {
    SuperFunction r(std::max(F.N, G.N));
    for (int p = 0; p < 2; ++p) {
        SuperFunction Fp = F.part(p);
        if (Fp.is_zero()) continue;
        for (int mu = 0; mu < 2; ++mu) {
            Boson q = static_cast<Boson>(mu), pm = static_cast<Boson>(mu + 2);
            r += d_boson(Fp, q) * d_boson(G, pm);
            r -= d_boson(Fp, pm) * d_boson(G, q);
        }
        SuperFunction ferm(r.N);
        for (int a = 0; a < 2; ++a) {
            Fermion xi = static_cast<Fermion>(a), pi = static_cast<Fermion>(a + 2);
            ferm += d_left(Fp, xi) * d_left(G, pi);
            ferm += d_left(Fp, pi) * d_left(G, xi);
        }
        r -= ferm.scaled(Gauss(psign(p)));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Realizations of (C3+A) generators Z, H, Q+, Q-

struct Realization {
    std::string name;
    bool deformed = false;
    int N = 0;
    std::array<SuperFunction, 4> images;
    const SuperFunction& image(Gen g) const { return images[static_cast<int>(g)]; }
};

namespace detail {
inline SuperFunction u_fn(int N) { return SuperFunction::boson(N, Boson::q1) * SuperFunction::boson(N, Boson::p2); }
inline SuperFunction xi1_pi2(int N) { return SuperFunction::fermion(N, Fermion::xi1) * SuperFunction::fermion(N, Fermion::pi2); }
inline SuperFunction half_q_pi(int N) {
    return (SuperFunction::boson(N, Boson::q1) * SuperFunction::fermion(N, Fermion::pi1) +
            SuperFunction::boson(N, Boson::q2) * SuperFunction::fermion(N, Fermion::pi2))
        .scaled(Gauss(make_rational(1, 2)));
}
}  // namespace detail

// S(Z) = -q1 p2 - xi1 pi2, S(H) = -q1 p2 + xi1 pi2, S(Q+) = q1 pi2, S(Q-) = -xi1 p2 + (q1 pi1 + q2 pi2)/2
inline Realization classical_realization(int N = 0) {
    Realization R{"undeformed", false, N, {}};
    SuperFunction u = detail::u_fn(N), xp = detail::xi1_pi2(N);
    R.images[0] = (u + xp).scaled(Gauss(-1));
    R.images[1] = xp - u;
    R.images[2] = SuperFunction::boson(N, Boson::q1) * SuperFunction::fermion(N, Fermion::pi2);
    R.images[3] = detail::half_q_pi(N) -
                  SuperFunction::fermion(N, Fermion::xi1) * SuperFunction::boson(N, Boson::p2);
    return R;
}

// -(1/l) sinh(l q1 p2) + xi1 pi2 cosh(l q1 p2), which is sinh(l S(H))/l for the S(H) above.
inline SuperFunction printed_deformed_h(int N) {
    return SuperFunction::of_u(series_sinh_over_x(N)).scaled(Gauss(-1)) +
           detail::xi1_pi2(N) * SuperFunction::of_u(series_cosh(N));
}

// Deformed realization: Z, H, Q+ as above, S(Q-) = -(xi1/(l q1)) sinh(l q1 p2) + (q1 pi1 + q2 pi2)/2.
// H keeps its undeformed image; the printed deformed expression is the image of sinh(l H)/l.
inline Realization deformed_realization(int N) {
    Realization R = classical_realization(N);
    R.name = "deformed";
    R.deformed = true;
    R.images[3] = detail::half_q_pi(N) - SuperFunction::fermion(N, Fermion::xi1) * SuperFunction::boson(N, Boson::p2) *
                                             SuperFunction::of_u(series_sinhc(N));
    return R;
}

// Same, with the printed expression taken literally as S(H).
inline Realization literal_deformed_realization(int N) {
    Realization R = deformed_realization(N);
    R.name = "deformed (literal H)";
    R.images[1] = printed_deformed_h(N);
    return R;
}

// Substitutes the realization into a normal-ordered element.
inline SuperFunction realize(const Realization& R, const UElement& x) {
    std::map<std::pair<int, int>, SuperFunction> powers;
    auto power = [&](int g, int e) -> const SuperFunction& {
        auto key = std::make_pair(g, e);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        return powers.emplace(key, pow(R.images[g], e)).first->second;
    };
    SuperFunction r(R.N);
    for (const auto& [m, s] : x.terms) {
        SuperFunction t = power(0, m.a) * power(1, m.b) * power(2, m.c) * power(3, m.d);
        r += t.scaled(s);
    }
    return r;
}

inline SuperFunction casimir_realized(const Realization& R, const UElement& C) { return realize(R, C); }

struct PhaseCheck {
    std::string name;
    bool pass = true;
    int first_failing_order = -1;
    std::string detail;
};

struct PhaseReport {
    std::string name;
    std::vector<PhaseCheck> checks;
    bool pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const PhaseCheck& c) { return c.pass; });
    }
};

inline PhaseCheck phase_verdict(const std::string& name, const SuperFunction& diff) {
    PhaseCheck c{name, diff.is_zero(), -1, ""};
    if (!c.pass) {
        c.first_failing_order = diff.lowest_order();
        c.detail = to_string(diff.at_order(c.first_failing_order));
    }
    return c;
}

// {S(X_i), S(X_j)} against the realized bracket computed in the enveloping algebra.
inline PhaseReport check_realization_closure(const Realization& R, const UAlgebra& alg) {
    PhaseReport rep{R.name + " closure", {}};
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            Gen a = all_gens[i], b = all_gens[j];
            UElement br = alg.bracket(UElement::gen(alg.order(), a), gen_parity(a), UElement::gen(alg.order(), b), gen_parity(b));
            SuperFunction lhs = poisson_bracket(R.images[i], R.images[j]);
            rep.checks.push_back(phase_verdict(std::string("{S(") + gen_name(a) + "),S(" + gen_name(b) + ")}", lhs - realize(R, br)));
        }
    return rep;
}

// Same against structure constants f^k_ij.
inline PhaseReport check_realization_closure(const Realization& R, const SuperAlgebra& A) {
    PhaseReport rep{R.name + " closure vs " + A.name, {}};
    for (int i = 0; i < A.n; ++i)
        for (int j = i; j < A.n; ++j) {
            SuperFunction rhs(R.N);
            for (int k = 0; k < A.n; ++k)
                if (!A(k, i, j).is_zero()) rhs += R.images[k].scaled(A(k, i, j));
            rep.checks.push_back(phase_verdict("{S(X" + std::to_string(i + 1) + "),S(X" + std::to_string(j + 1) + ")}",
                                               poisson_bracket(R.images[i], R.images[j]) - rhs));
        }
    return rep;
}

inline PhaseReport check_involution(const SuperFunction& H, const std::vector<std::pair<std::string, SuperFunction>>& conserved) {
    PhaseReport rep{"involution", {}};
    for (const auto& [name, c] : conserved) rep.checks.push_back(phase_verdict("{H," + name + "}", poisson_bracket(H, c)));
    return rep;
}

// Relation sets realized by the two built-in realizations.
inline UAlgebra undeformed_relations(int N) {
    PolySeries h(N);
    h[0] = Poly1::monomial(1, Gauss(1));
    return UAlgebra(h);
}
inline UAlgebra deformed_relations(int N) { return UAlgebra(series_sinh_over_x(N)); }

// S(C) + F(S(H)) for a polynomial F.
inline SuperFunction hamiltonian(const Realization& R, const UElement& C, const Poly1& F) {
    SuperFunction h = casimir_realized(R, C);
    for (int m = 0; m <= F.degree(); ++m)
        if (!F.at(m).is_zero()) h += pow(R.image(Gen::H), m).scaled(F.at(m));
    return h;
}

inline std::vector<std::pair<std::string, SuperFunction>> generator_images(const Realization& R) {
    std::vector<std::pair<std::string, SuperFunction>> out;
    for (Gen g : all_gens) out.push_back({std::string("S(") + gen_name(g) + ")", R.image(g)});
    return out;
}

// Random homogeneous polynomial superfunction with small rational coefficients.
inline SuperFunction random_superfunction(std::mt19937_64& rng, int parity, int N = 0, int terms = 3, int max_exp = 2) {
    SuperFunction f(N);
    std::uniform_int_distribution<int> ex(0, max_exp), coef(-4, 4), sub(0, 15);
    for (int t = 0; t < terms; ++t) {
        PhaseKey k;
        for (int i = 0; i < 4; ++i) k.e[i] = ex(rng);
        do k.g = static_cast<std::uint8_t>(sub(rng));
        while (k.parity() != parity);
        int c = coef(rng);
        if (c == 0) c = 1;
        LambdaSeries s(N);
        s[0] = Gauss(c);
        f.add(k, s);
    }
    return f;
}

// Graded Jacobi sum (-1)^{|F||H|}{F,{G,H}} + cyclic.
inline SuperFunction poisson_jacobi_sum(const SuperFunction& F, const SuperFunction& G, const SuperFunction& H) {
    int f = F.parity(), g = G.parity(), h = H.parity();
    return poisson_bracket(F, poisson_bracket(G, H)).scaled(Gauss(psign(f * h))) +
           poisson_bracket(G, poisson_bracket(H, F)).scaled(Gauss(psign(g * f))) +
           poisson_bracket(H, poisson_bracket(F, G)).scaled(Gauss(psign(h * g)));
}

}  // namespace sba
