#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bialgebra.hpp"
#include "series.hpp"

namespace sba {

// Generators of U_lambda((C3+A)) in the order used by normal forms.
enum class Gen { Z = 0, H = 1, QP = 2, QM = 3 };

inline const char* gen_name(Gen g) {
    static const char* names[] = {"Z", "H", "Q+", "Q-"};
    return names[static_cast<int>(g)];
}
inline int gen_parity(Gen g) { return g == Gen::QP || g == Gen::QM ? 1 : 0; }
inline constexpr std::array<Gen, 4> all_gens{Gen::Z, Gen::H, Gen::QP, Gen::QM};

// Z^a H^b Q+^c Q-^d with c, d in {0,1}.
struct NormalMonomial {
    int a = 0, b = 0, c = 0, d = 0;
    int parity() const { return (c + d) & 1; }
    int degree() const { return a + b + c + d; }
    bool is_unit() const { return a == 0 && b == 0 && c == 0 && d == 0; }
    auto operator<=>(const NormalMonomial&) const = default;
};

inline std::string to_string(const NormalMonomial& m) {
    std::string s;
    auto put = [&](const char* g, int e) {
        if (e == 0) return;
        if (!s.empty()) s += " ";
        s += g;
        if (e > 1) s += "^" + std::to_string(e);
    };
    put("Z", m.a);
    put("H", m.b);
    put("Q+", m.c);
    put("Q-", m.d);
    return s.empty() ? "1" : s;
}

inline std::string series_to_string(const LambdaSeries& s) {
    std::string out;
    for (int k = 0; k <= s.order(); ++k) {
        if (s[k].is_zero()) continue;
        std::string c = to_string(s[k]);
        if (!s[k].is_real() && sgn(s[k].re) != 0) c = "(" + c + ")";
        std::string term = k == 0 ? c : (s[k].is_one() ? "" : (s[k] == Gauss(-1) ? "-" : c + "*")) + "l" + (k > 1 ? "^" + std::to_string(k) : "");
        if (out.empty()) out = term;
        else if (term[0] == '-') out += " - " + term.substr(1);
        else out += " + " + term;
    }
    return out.empty() ? "0" : out;
}

// Lowest lambda order with a nonzero coefficient, or -1.
inline int lowest_order(const LambdaSeries& s) {
    for (int k = 0; k <= s.order(); ++k)
        if (!s[k].is_zero()) return k;
    return -1;
}

// Element of the deformed enveloping algebra, truncated at lambda^N.
struct UElement {
    int N = 0;
    std::map<NormalMonomial, LambdaSeries> terms;

    UElement() = default;
    explicit UElement(int order) : N(order) {}
    static UElement unit(int order, Gauss c = Gauss(1)) { return monomial(order, {}, LambdaSeries(order, c)); }
    static UElement monomial(int order, const NormalMonomial& m, const LambdaSeries& s) {
        UElement e(order);
        e.add(m, s);
        return e;
    }
    static UElement gen(int order, Gen g) {
        NormalMonomial m;
        switch (g) {
            case Gen::Z: m.a = 1; break;
            case Gen::H: m.b = 1; break;
            case Gen::QP: m.c = 1; break;
            case Gen::QM: m.d = 1; break;
        }
        return monomial(order, m, LambdaSeries(order, Gauss(1)));
    }
    // f(H) for a lambda series with polynomial-in-H coefficients.
    static UElement of_h(const PolySeries& f) {
        UElement e(f.order());
        for (int k = 0; k <= f.order(); ++k)
            for (int m = 0; m <= f[k].degree(); ++m) {
                if (f[k].at(m).is_zero()) continue;
                LambdaSeries s(f.order());
                s[k] = f[k].at(m);
                e.add(NormalMonomial{0, m, 0, 0}, s);
            }
        return e;
    }

    void add(const NormalMonomial& m, const LambdaSeries& s) {
        if (s.is_zero()) return;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, s);
            return;
        }
        it->second += s;
        if (it->second.is_zero()) terms.erase(it);
    }
    UElement& operator+=(const UElement& o) {
        for (const auto& [m, s] : o.terms) add(m, s);
        return *this;
    }
    UElement& operator-=(const UElement& o) {
        for (const auto& [m, s] : o.terms) add(m, -s);
        return *this;
    }
    friend UElement operator+(UElement a, const UElement& b) { return a += b; }
    friend UElement operator-(UElement a, const UElement& b) { return a -= b; }
    UElement scaled(const LambdaSeries& s) const {
        UElement r(N);
        for (const auto& [m, c] : terms) r.add(m, c * s);
        return r;
    }
    UElement scaled(const Gauss& g) const { return scaled(LambdaSeries(N, g)); }
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const UElement& a, const UElement& b) { return a.terms == b.terms; }
    // Degree-0 slice in lambda.
    UElement at_order(int k) const {
        UElement r(N);
        for (const auto& [m, s] : terms) {
            if (s[k].is_zero()) continue;
            LambdaSeries t(N);
            t[0] = s[k];
            r.add(m, t);
        }
        return r;
    }
    int lowest_order() const {
        int best = -1;
        for (const auto& [m, s] : terms) {
            int k = sba::lowest_order(s);
            if (k >= 0 && (best < 0 || k < best)) best = k;
        }
        return best;
    }
};

inline std::string to_string(const UElement& e) {
    if (e.terms.empty()) return "0";
    std::string out;
    for (const auto& [m, s] : e.terms) {
        std::string t = "(" + series_to_string(s) + ")" + (m.is_unit() ? "" : " " + to_string(m));
        out += out.empty() ? t : " + " + t;
    }
    return out;
}

// Normal-form multiplication under the relations
//   [Z,Q-] = Q+, {Q-,Q-} = phi(H), H and Q+ central, Q+^2 = 0.
class UAlgebra {
  public:
    UAlgebra() = default;
    explicit UAlgebra(PolySeries anticommutator) : phi_(std::move(anticommutator)), N_(phi_.order()) {}

    int order() const { return N_; }
    const PolySeries& phi() const { return phi_; }

    // m * g as a normal-ordered element.
    UElement mul_gen(const NormalMonomial& m, Gen g) const {
        UElement r(N_);
        LambdaSeries one(N_, Gauss(1));
        switch (g) {
            case Gen::Z:
                if (m.d == 0) {
                    r.add({m.a + 1, m.b, m.c, 0}, one);
                } else {
                    // Q- Z = Z Q- - Q+
                    r.add({m.a + 1, m.b, m.c, 1}, one);
                    if (m.c == 0) r.add({m.a, m.b, 1, 0}, -one);
                }
                break;
            case Gen::H: r.add({m.a, m.b + 1, m.c, m.d}, one); break;
            case Gen::QP:
                if (m.c == 1) break;
                // Q- Q+ = -Q+ Q-
                r.add({m.a, m.b, 1, m.d}, m.d ? -one : one);
                break;
            case Gen::QM:
                if (m.d == 0) {
                    r.add({m.a, m.b, m.c, 1}, one);
                } else {
                    // Q- Q- = phi(H)/2
                    Gauss half(make_rational(1, 2));
                    for (int k = 0; k <= N_; ++k)
                        for (int p = 0; p <= phi_[k].degree(); ++p) {
                            if (phi_[k].at(p).is_zero()) continue;
                            LambdaSeries s(N_);
                            s[k] = half * phi_[k].at(p);
                            r.add({m.a, m.b + p, m.c, 0}, s);
                        }
                }
                break;
        }
        return r;
    }

    UElement mul_gen(const UElement& x, Gen g) const {
        UElement r(N_);
        for (const auto& [m, s] : x.terms) r += mul_gen(m, g).scaled(s);
        return r;
    }

    UElement mul(const UElement& x, const NormalMonomial& m) const {
        UElement cur = x;
        for (int k = 0; k < m.a; ++k) cur = mul_gen(cur, Gen::Z);
        if (m.b) {
            UElement shifted(N_);
            for (const auto& [mm, s] : cur.terms) shifted.add({mm.a, mm.b + m.b, mm.c, mm.d}, s);
            cur = std::move(shifted);
        }
        if (m.c) cur = mul_gen(cur, Gen::QP);
        if (m.d) cur = mul_gen(cur, Gen::QM);
        return cur;
    }

    UElement mul(const UElement& x, const UElement& y) const {
        UElement r(N_);
        for (const auto& [m, s] : y.terms) r += mul(x, m).scaled(s);
        return r;
    }

    UElement word(const std::vector<Gen>& w) const {
        UElement cur = UElement::unit(N_);
        for (Gen g : w) cur = mul_gen(cur, g);
        return cur;
    }

    UElement pow(const UElement& x, int e) const {
        UElement r = UElement::unit(N_);
        for (int k = 0; k < e; ++k) r = mul(r, x);
        return r;
    }

    // Graded commutator xy - (-1)^{|x||y|} yx for homogeneous x, y.
    UElement bracket(const UElement& x, int px, const UElement& y, int py) const {
        return mul(x, y) - mul(y, x).scaled(Gauss(psign(px * py)));
    }

  private:
    PolySeries phi_;
    int N_ = 0;
};

// Element of the K-fold graded tensor power.
template <int K>
struct UTensor {
    using Key = std::array<NormalMonomial, K>;
    int N = 0;
    std::map<Key, LambdaSeries> terms;

    UTensor() = default;
    explicit UTensor(int order) : N(order) {}
    void add(const Key& k, const LambdaSeries& s) {
        if (s.is_zero()) return;
        auto it = terms.find(k);
        if (it == terms.end()) {
            terms.emplace(k, s);
            return;
        }
        it->second += s;
        if (it->second.is_zero()) terms.erase(it);
    }
    UTensor& operator+=(const UTensor& o) {
        for (const auto& [k, s] : o.terms) add(k, s);
        return *this;
    }
    UTensor& operator-=(const UTensor& o) {
        for (const auto& [k, s] : o.terms) add(k, -s);
        return *this;
    }
    friend UTensor operator+(UTensor a, const UTensor& b) { return a += b; }
    friend UTensor operator-(UTensor a, const UTensor& b) { return a -= b; }
    friend bool operator==(const UTensor& a, const UTensor& b) { return a.terms == b.terms; }
    UTensor scaled(const LambdaSeries& s) const {
        UTensor r(N);
        for (const auto& [k, c] : terms) r.add(k, c * s);
        return r;
    }
    UTensor scaled(const Gauss& g) const { return scaled(LambdaSeries(N, g)); }
    bool is_zero() const { return terms.empty(); }
    int lowest_order() const {
        int best = -1;
        for (const auto& [k, s] : terms) {
            int o = sba::lowest_order(s);
            if (o >= 0 && (best < 0 || o < best)) best = o;
        }
        return best;
    }
    // First term carrying the lowest nonzero order.
    std::string lowest_term() const {
        int o = lowest_order();
        for (const auto& [k, s] : terms)
            if (o >= 0 && !s[o].is_zero()) {
                std::string t = to_string(s[o]);
                for (int i = 0; i < K; ++i) t += (i ? " (x) " : " ") + to_string(k[i]);
                return "l^" + std::to_string(o) + ": " + t;
            }
        return "";
    }
};

using UTensor2 = UTensor<2>;
using UTensor3 = UTensor<3>;

inline UTensor2 tensor(const UElement& x, const UElement& y) {
    UTensor2 t(x.N);
    for (const auto& [m1, s1] : x.terms)
        for (const auto& [m2, s2] : y.terms) t.add({m1, m2}, s1 * s2);
    return t;
}

inline std::string to_string(const UTensor2& t) {
    if (t.terms.empty()) return "0";
    std::string out;
    for (const auto& [k, s] : t.terms) {
        std::string term = "(" + series_to_string(s) + ") " + to_string(k[0]) + " (x) " + to_string(k[1]);
        out += out.empty() ? term : " + " + term;
    }
    return out;
}

// (x_1 (x) ... (x) x_K)(y_1 (x) ... (x) y_K) = (-1)^{sum_{i>j} |x_i||y_j|} x_1y_1 (x) ... (x) x_Ky_K
template <int K>
UTensor<K> tensor_mul(const UAlgebra& alg, const UTensor<K>& x, const UTensor<K>& y) {
    UTensor<K> r(alg.order());
    for (const auto& [kx, sx] : x.terms)
        for (const auto& [ky, sy] : y.terms) {
            int e = 0;
            for (int i = 0; i < K; ++i)
                for (int j = 0; j < i; ++j) e += kx[i].parity() * ky[j].parity();
            LambdaSeries coeff = (sx * sy).scaled(Gauss(psign(e)));
            std::array<UElement, K> f;
            for (int i = 0; i < K; ++i)
                f[i] = alg.mul(UElement::monomial(alg.order(), kx[i], LambdaSeries(alg.order(), Gauss(1))),
                               UElement::monomial(alg.order(), ky[i], LambdaSeries(alg.order(), Gauss(1))));
            // expand the product of the K factors
            std::vector<std::pair<typename UTensor<K>::Key, LambdaSeries>> acc{{{}, coeff}};
            for (int i = 0; i < K; ++i) {
                std::vector<std::pair<typename UTensor<K>::Key, LambdaSeries>> next;
                for (const auto& [key, s] : acc)
                    for (const auto& [m, c] : f[i].terms) {
                        auto k2 = key;
                        k2[i] = m;
                        next.push_back({k2, s * c});
                    }
                acc = std::move(next);
            }
            for (const auto& [key, s] : acc) r.add(key, s);
        }
    return r;
}

template <int K>
UTensor<K> tensor_unit(int N) {
    UTensor<K> t(N);
    t.add({}, LambdaSeries(N, Gauss(1)));
    return t;
}

// ---------------------------------------------------------------------------
// Hopf deformations

struct Relation {
    std::string label;
    std::vector<std::pair<Gauss, std::vector<Gen>>> lhs;  // linear combination of words
    UElement rhs;
};

struct HopfDeformation {
    std::string name;           // prop4 | prop5 | prop6
    std::string relation_label;  // relation set in use
    std::string dual_name;      // paired dual superalgebra
    std::string provenance;     // matrices of the construction, when given
    int N = 0;
    UAlgebra alg;
    std::array<UTensor2, 4> coproduct;
    std::array<UElement, 4> antipode;
    UElement casimir;
    std::vector<Relation> relations;

    const UTensor2& delta(Gen g) const { return coproduct[static_cast<int>(g)]; }
    const UElement& gamma(Gen g) const { return antipode[static_cast<int>(g)]; }
};

namespace detail {

inline UElement h_exp(int N, const Gauss& s) { return UElement::of_h(series_exp_linear(N, s)); }

inline std::vector<Relation> defining_relations(const UAlgebra& alg) {
    int N = alg.order();
    UElement zero(N);
    std::vector<Relation> r;
    using G = Gen;
    r.push_back({"[Z,Q-] = Q+", {{Gauss(1), {G::Z, G::QM}}, {Gauss(-1), {G::QM, G::Z}}}, UElement::gen(N, G::QP)});
    r.push_back({"{Q-,Q-} = phi(H)", {{Gauss(2), {G::QM, G::QM}}}, UElement::of_h(alg.phi())});
    r.push_back({"[H,Z] = 0", {{Gauss(1), {G::H, G::Z}}, {Gauss(-1), {G::Z, G::H}}}, zero});
    r.push_back({"[H,Q+] = 0", {{Gauss(1), {G::H, G::QP}}, {Gauss(-1), {G::QP, G::H}}}, zero});
    r.push_back({"[H,Q-] = 0", {{Gauss(1), {G::H, G::QM}}, {Gauss(-1), {G::QM, G::H}}}, zero});
    r.push_back({"[Q+,Z] = 0", {{Gauss(1), {G::QP, G::Z}}, {Gauss(-1), {G::Z, G::QP}}}, zero});
    r.push_back({"{Q+,Q-} = 0", {{Gauss(1), {G::QP, G::QM}}, {Gauss(1), {G::QM, G::QP}}}, zero});
    r.push_back({"{Q+,Q+} = 0", {{Gauss(2), {G::QP, G::QP}}}, zero});
    return r;
}

}  // namespace detail

enum class AntipodeVariant { Derived, AsPrinted };

// Proposition 4: {Q-,Q-} = sinh(lambda H)/lambda, symmetric coproduct with e^{+-lambda H/2}.
// Proposition 5: {Q-,Q-} = (1 - e^{-2 lambda H})/(2 lambda).
// Proposition 6: relations of Proposition 5 with its own coproduct.
inline HopfDeformation make_deformation(const std::string& name, int N,
                                        AntipodeVariant variant = AntipodeVariant::Derived) {
    if (N < 0) throw std::invalid_argument("negative order");
    HopfDeformation d;
    d.name = name;
    d.N = N;
    using G = Gen;
    auto one = UElement::unit(N);
    auto g = [&](G x) { return UElement::gen(N, x); };
    auto prim = [&](G x) { return tensor(one, g(x)) + tensor(g(x), one); };
    Gauss half(make_rational(1, 2));
    PolySeries psi = series_one_minus_exp_over_2x(N);
    if (name == "prop4") {
        d.relation_label = "{Q-,Q-} = sinh(lH)/l";
        d.dual_name = "C2_p=1(+)A11";
        d.provenance = "mu_1 = 0, mu_2 = diag(l/2, l/2), nu_1 = 0, nu_2 = diag(-l/2, -l/2)";
        d.alg = UAlgebra(series_sinh_over_x(N));
        UElement ep = detail::h_exp(N, half), em = detail::h_exp(N, -half);
        d.coproduct = {prim(G::Z), prim(G::H), tensor(ep, g(G::QP)) + tensor(g(G::QP), em),
                       tensor(ep, g(G::QM)) + tensor(g(G::QM), em)};
        d.antipode = {g(G::Z).scaled(Gauss(-1)), g(G::H).scaled(Gauss(-1)), g(G::QP).scaled(Gauss(-1)),
                      g(G::QM).scaled(Gauss(-1))};
    } else if (name == "prop5") {
        d.relation_label = "{Q-,Q-} = (1-e^{-2lH})/(2l)";
        d.dual_name = "C4(+)A11";
        d.alg = UAlgebra(psi);
        UElement em = detail::h_exp(N, Gauss(-1)), ep = detail::h_exp(N, Gauss(1));
        UElement hem = d.alg.mul(g(G::H), em);
        d.coproduct = {prim(G::Z), prim(G::H), tensor(one, g(G::QP)) + tensor(g(G::QP), em),
                       tensor(one, g(G::QM)) + tensor(g(G::QM), em) - tensor(g(G::QP), hem)};
        if (variant == AntipodeVariant::AsPrinted) {
            // gamma(Q+) = -Q+ e^{lH} - H Q- e^{lH}, gamma(Q-) = -Q- e^{lH}
            d.antipode = {g(G::Z).scaled(Gauss(-1)), g(G::H).scaled(Gauss(-1)),
                          (d.alg.mul(g(G::QP), ep) + d.alg.mul(d.alg.mul(g(G::H), g(G::QM)), ep)).scaled(Gauss(-1)),
                          d.alg.mul(g(G::QM), ep).scaled(Gauss(-1))};
        } else {
            // gamma(Q+) = -Q+ e^{lH}, gamma(Q-) = -Q- e^{lH} - Q+ H e^{lH}
            d.antipode = {g(G::Z).scaled(Gauss(-1)), g(G::H).scaled(Gauss(-1)),
                          d.alg.mul(g(G::QP), ep).scaled(Gauss(-1)),
                          (d.alg.mul(g(G::QM), ep) + d.alg.mul(d.alg.mul(g(G::QP), g(G::H)), ep)).scaled(Gauss(-1))};
        }
    } else if (name == "prop6") {
        d.relation_label = "{Q-,Q-} = (1-e^{-2lH})/(2l)";
        d.dual_name = "C1_p=-1(+)A";
        d.alg = UAlgebra(psi);
        UElement em = detail::h_exp(N, Gauss(-1)), ep = detail::h_exp(N, Gauss(1));
        d.coproduct = {tensor(one, g(G::Z)) + tensor(g(G::Z), ep), prim(G::H), prim(G::QP),
                       tensor(one, g(G::QM)) + tensor(g(G::QM), em)};
        d.antipode = {d.alg.mul(g(G::Z), em).scaled(Gauss(-1)), g(G::H).scaled(Gauss(-1)), g(G::QP).scaled(Gauss(-1)),
                      d.alg.mul(g(G::QM), ep).scaled(Gauss(-1))};
    } else {
        throw std::invalid_argument("unknown deformation '" + name + "' (expected prop4, prop5 or prop6)");
    }
    d.relations = detail::defining_relations(d.alg);
    // Casimir 2 Z phi(H) - 2 Q+ Q-
    UElement phi = UElement::of_h(d.alg.phi());
    d.casimir = (d.alg.mul(g(G::Z), phi) - d.alg.mul(g(G::QP), g(G::QM))).scaled(Gauss(2));
    return d;
}

// Classical Casimir 2(ZH - Q+Q-).
inline UElement classical_casimir(const UAlgebra& alg) {
    int N = alg.order();
    return (alg.mul(UElement::gen(N, Gen::Z), UElement::gen(N, Gen::H)) -
            alg.mul(UElement::gen(N, Gen::QP), UElement::gen(N, Gen::QM)))
        .scaled(Gauss(2));
}

// ---------------------------------------------------------------------------
// Structure maps on arbitrary elements

class HopfMaps {
  public:
    explicit HopfMaps(const HopfDeformation& d) : d_(d) {}

    UTensor2 coproduct(const NormalMonomial& m) const {
        auto it = cache_.find(m);
        if (it != cache_.end()) return it->second;
        UTensor2 r = tensor_unit<2>(d_.N);
        for (int k = 0; k < m.a; ++k) r = tensor_mul(d_.alg, r, d_.delta(Gen::Z));
        for (int k = 0; k < m.b; ++k) r = tensor_mul(d_.alg, r, d_.delta(Gen::H));
        if (m.c) r = tensor_mul(d_.alg, r, d_.delta(Gen::QP));
        if (m.d) r = tensor_mul(d_.alg, r, d_.delta(Gen::QM));
        cache_.emplace(m, r);
        return r;
    }
    UTensor2 coproduct(const UElement& x) const {
        UTensor2 r(d_.N);
        for (const auto& [m, s] : x.terms) r += coproduct(m).scaled(s);
        return r;
    }
    // Coproduct of a word, multiplied out in the tensor square.
    UTensor2 coproduct_word(const std::vector<Gen>& w) const {
        UTensor2 r = tensor_unit<2>(d_.N);
        for (Gen g : w) r = tensor_mul(d_.alg, r, d_.delta(g));
        return r;
    }

    static LambdaSeries counit(const UElement& x) {
        for (const auto& [m, s] : x.terms)
            if (m.is_unit()) return s;
        return LambdaSeries(x.N);
    }

    // gamma(x1...xk) = (-1)^{#odd pairs} gamma(xk)...gamma(x1)
    UElement antipode(const NormalMonomial& m) const {
        std::vector<Gen> w;
        for (int k = 0; k < m.a; ++k) w.push_back(Gen::Z);
        for (int k = 0; k < m.b; ++k) w.push_back(Gen::H);
        if (m.c) w.push_back(Gen::QP);
        if (m.d) w.push_back(Gen::QM);
        return antipode_word(w);
    }
    UElement antipode_word(const std::vector<Gen>& w) const {
        UElement r = UElement::unit(d_.N);
        int odd = 0;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            r = d_.alg.mul(r, d_.gamma(*it));
            odd += gen_parity(*it);
        }
        return r.scaled(Gauss(psign(odd * (odd - 1) / 2)));
    }
    UElement antipode(const UElement& x) const {
        UElement r(d_.N);
        for (const auto& [m, s] : x.terms) r += antipode(m).scaled(s);
        return r;
    }

    UTensor3 delta_then_left(const UTensor2& t) const {
        UTensor3 r(d_.N);
        for (const auto& [k, s] : t.terms)
            for (const auto& [k2, s2] : coproduct(k[0]).terms) r.add({k2[0], k2[1], k[1]}, s * s2);
        return r;
    }
    UTensor3 delta_then_right(const UTensor2& t) const {
        UTensor3 r(d_.N);
        for (const auto& [k, s] : t.terms)
            for (const auto& [k2, s2] : coproduct(k[1]).terms) r.add({k[0], k2[0], k2[1]}, s * s2);
        return r;
    }
    // (eps (x) id) and (id (x) eps)
    UElement counit_left(const UTensor2& t) const {
        UElement r(d_.N);
        for (const auto& [k, s] : t.terms)
            if (k[0].is_unit()) r.add(k[1], s);
        return r;
    }
    UElement counit_right(const UTensor2& t) const {
        UElement r(d_.N);
        for (const auto& [k, s] : t.terms)
            if (k[1].is_unit()) r.add(k[0], s);
        return r;
    }
    // m(gamma (x) id) and m(id (x) gamma)
    UElement antipode_left(const UTensor2& t) const {
        UElement r(d_.N);
        for (const auto& [k, s] : t.terms)
            r += d_.alg.mul(antipode(k[0]), UElement::monomial(d_.N, k[1], LambdaSeries(d_.N, Gauss(1)))).scaled(s);
        return r;
    }
    UElement antipode_right(const UTensor2& t) const {
        UElement r(d_.N);
        for (const auto& [k, s] : t.terms)
            r += d_.alg.mul(UElement::monomial(d_.N, k[0], LambdaSeries(d_.N, Gauss(1))), antipode(k[1])).scaled(s);
        return r;
    }

  private:
    const HopfDeformation& d_;
    mutable std::map<NormalMonomial, UTensor2> cache_;
};

inline UTensor2 coproduct_apply(const UElement& x, const HopfDeformation& d) { return HopfMaps(d).coproduct(x); }

// ---------------------------------------------------------------------------
// Axiom checks

struct AxiomCheck {
    std::string axiom;
    std::string subject;
    bool pass = true;
    int first_failing_order = -1;
    std::string detail;
};

struct HopfReport {
    std::string name;
    int order = 0;
    std::vector<AxiomCheck> checks;
    bool pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
    }
    const AxiomCheck* first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }
};

namespace detail {

inline AxiomCheck verdict(const std::string& axiom, const std::string& subject, const UElement& diff) {
    AxiomCheck c{axiom, subject, diff.is_zero(), -1, ""};
    if (!c.pass) {
        c.first_failing_order = diff.lowest_order();
        c.detail = to_string(diff.at_order(c.first_failing_order));
    }
    return c;
}

template <int K>
AxiomCheck verdict(const std::string& axiom, const std::string& subject, const UTensor<K>& diff) {
    AxiomCheck c{axiom, subject, diff.is_zero(), -1, ""};
    if (!c.pass) {
        c.first_failing_order = diff.lowest_order();
        c.detail = diff.lowest_term();
    }
    return c;
}

}  // namespace detail

inline HopfReport check_hopf_axioms(const HopfDeformation& d) {
    if (d.N < 2) throw std::invalid_argument("check_hopf_axioms needs order >= 2");
    HopfMaps maps(d);
    HopfReport rep{d.name, d.N, {}};
    int N = d.N;
    for (Gen g : all_gens) {
        const UTensor2& D = d.delta(g);
        std::string s = gen_name(g);
        rep.checks.push_back(detail::verdict("coassociativity", s, maps.delta_then_left(D) - maps.delta_then_right(D)));
        UElement x = UElement::gen(N, g);
        rep.checks.push_back(detail::verdict("counit (eps x id)", s, maps.counit_left(D) - x));
        rep.checks.push_back(detail::verdict("counit (id x eps)", s, maps.counit_right(D) - x));
        UElement unit_eps = UElement::unit(N).scaled(HopfMaps::counit(x));
        rep.checks.push_back(detail::verdict("antipode m(S x id)", s, maps.antipode_left(D) - unit_eps));
        rep.checks.push_back(detail::verdict("antipode m(id x S)", s, maps.antipode_right(D) - unit_eps));
    }
    for (const auto& rel : d.relations) {
        UTensor2 lhs(N);
        UElement glhs(N), alhs(N);
        for (const auto& [c, w] : rel.lhs) {
            lhs += maps.coproduct_word(w).scaled(c);
            glhs += maps.antipode_word(w).scaled(c);
            alhs += d.alg.word(w).scaled(c);
        }
        rep.checks.push_back(detail::verdict("relation holds", rel.label, alhs - rel.rhs));
        rep.checks.push_back(detail::verdict("coproduct respects relation", rel.label, lhs - maps.coproduct(rel.rhs)));
        rep.checks.push_back(detail::verdict("antipode respects relation", rel.label, glhs - maps.antipode(rel.rhs)));
    }
    return rep;
}

struct CasimirReport {
    std::string name;
    std::vector<AxiomCheck> checks;  // one per generator, plus the classical limit
    bool pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
    }
};

inline CasimirReport check_casimir_central(const HopfDeformation& d, const UElement& C) {
    CasimirReport rep{d.name, {}};
    for (Gen g : all_gens) {
        UElement x = UElement::gen(d.N, g);
        rep.checks.push_back(detail::verdict("central", std::string("[C,") + gen_name(g) + "]", d.alg.bracket(C, 0, x, gen_parity(g))));
    }
    UElement limit = C.at_order(0);
    PolySeries h(d.N);
    h[0] = Poly1::monomial(1, Gauss(1));
    UAlgebra cl(h);
    rep.checks.push_back(detail::verdict("classical limit", "C at l^0 vs 2(ZH - Q+Q-)", limit - classical_casimir(cl)));
    return rep;
}

inline CasimirReport check_casimir_central(const HopfDeformation& d) { return check_casimir_central(d, d.casimir); }

// ---------------------------------------------------------------------------
// Cocommutator from the coproduct: delta = Delta - sigma Delta at orders 0 and 1,
// with the primitive part removed, lambda identified with eps, and only
// generator-by-generator terms kept.

inline DualStructure first_order_cocommutator(const HopfDeformation& d) {
    Grading g = Grading::standard22();
    DualStructure out("delta(" + d.name + ")", g);
    auto index_of = [](const NormalMonomial& m) -> int {
        if (m.degree() != 1) return -1;
        if (m.a) return 0;
        if (m.b) return 1;
        if (m.c) return 2;
        return 3;
    };
    for (Gen x : all_gens) {
        int i = static_cast<int>(x);
        Tensor2 t(4, 4);
        for (const auto& [k, s] : d.delta(x).terms) {
            int a = index_of(k[0]), b = index_of(k[1]);
            if (a < 0 || b < 0) continue;
            Gauss c = s[0] + (s.order() >= 1 ? s[1] : Gauss());
            t(a, b) += c;
        }
        Tensor2 anti = t - graded_flip(t, g);
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) out.ft[(static_cast<size_t>(j) * 4 + k) * 4 + i] = Gauss(g.sign(j, k)) * anti(j, k);
    }
    return out;
}

// The (C3+A) brackets in the Z, H, Q+, Q- basis of the deformation section.
inline SuperAlgebra classical_c3a() {
    SuperAlgebra A("(C3+A)", Grading::standard22());
    A.set(2, 0, 3, Gauss(1));  // [Z,Q-] = Q+
    A.set(1, 3, 3, Gauss(1));  // {Q-,Q-} = H
    return A;
}

// ---------------------------------------------------------------------------
// Independent rewriting oracle: applies one rule at a random out-of-order
// position of a word until every word is normal.

struct WordRewriter {
    PolySeries phi;
    int N;

    using Word = std::vector<Gen>;

    UElement normalize(const Word& start, std::mt19937_64& rng) const {
        std::map<Word, LambdaSeries> pending{{start, LambdaSeries(N, Gauss(1))}};
        UElement done(N);
        while (!pending.empty()) {
            auto it = pending.begin();
            std::advance(it, std::uniform_int_distribution<size_t>(0, pending.size() - 1)(rng));
            Word w = it->first;
            LambdaSeries c = it->second;
            pending.erase(it);
            if (c.is_zero()) continue;
            std::vector<size_t> bad;
            for (size_t p = 0; p + 1 < w.size(); ++p)
                if (static_cast<int>(w[p]) >= static_cast<int>(w[p + 1]) &&
                    !(w[p] == w[p + 1] && (w[p] == Gen::Z || w[p] == Gen::H)))
                    bad.push_back(p);
            if (bad.empty()) {
                NormalMonomial m;
                for (Gen g : w) {
                    if (g == Gen::Z) ++m.a;
                    else if (g == Gen::H) ++m.b;
                    else if (g == Gen::QP) ++m.c;
                    else ++m.d;
                }
                done.add(m, c);
                continue;
            }
            size_t p = bad[std::uniform_int_distribution<size_t>(0, bad.size() - 1)(rng)];
            Gen x = w[p], y = w[p + 1];
            auto put = [&](Word nw, const LambdaSeries& s) {
                if (s.is_zero()) return;
                auto f = pending.find(nw);
                if (f == pending.end()) pending.emplace(std::move(nw), s);
                else f->second += s;
            };
            auto swapped = [&]() {
                Word nw = w;
                std::swap(nw[p], nw[p + 1]);
                return nw;
            };
            auto without = [&](std::vector<Gen> mid) {
                Word nw(w.begin(), w.begin() + static_cast<long>(p));
                nw.insert(nw.end(), mid.begin(), mid.end());
                nw.insert(nw.end(), w.begin() + static_cast<long>(p) + 2, w.end());
                return nw;
            };
            if (x == Gen::QM && y == Gen::QM) {
                Gauss half(make_rational(1, 2));
                for (int k = 0; k <= N; ++k)
                    for (int q = 0; q <= phi[k].degree(); ++q) {
                        if (phi[k].at(q).is_zero()) continue;
                        LambdaSeries s(N);
                        s[k] = half * phi[k].at(q);
                        put(without(std::vector<Gen>(q, Gen::H)), c * s);
                    }
            } else if (x == Gen::QP && y == Gen::QP) {
                // Q+ Q+ = 0
            } else if (x == Gen::QM && y == Gen::QP) {
                put(swapped(), -c);
            } else if (x == Gen::QM && y == Gen::Z) {
                put(swapped(), c);
                put(without({Gen::QP}), -c);
            } else {
                put(swapped(), c);  // everything else commutes
            }
        }
        return done;
    }
};

}  // namespace sba
