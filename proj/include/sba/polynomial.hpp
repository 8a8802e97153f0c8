#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "scalar.hpp"

namespace sba {

// Sparse Laurent polynomial over Q(i) in named variables.
struct Poly {
    using Mono = std::map<std::string, int>;  // variable -> nonzero exponent
    std::map<Mono, Gauss> terms;

    Poly() = default;
    Poly(const Gauss& c) {
        if (!c.is_zero()) terms[Mono{}] = c;
    }
    Poly(int c) : Poly(Gauss(c)) {}
    static Poly var(const std::string& name, int e = 1) {
        Poly p;
        p.terms[Mono{{name, e}}] = Gauss(1);
        return p;
    }
    static Poly monomial(const Mono& m, const Gauss& c) {
        Poly p;
        if (!c.is_zero()) p.terms[m] = c;
        return p;
    }

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const { return terms.empty() || (terms.size() == 1 && terms.begin()->first.empty()); }
    Gauss constant() const {
        auto it = terms.find(Mono{});
        return it == terms.end() ? Gauss() : it->second;
    }
    bool is_monomial() const { return terms.size() == 1; }

    std::set<std::string> variables() const {
        std::set<std::string> v;
        for (const auto& [m, c] : terms)
            for (const auto& [x, e] : m) v.insert(x);
        return v;
    }
    int degree_in(const std::string& x) const {
        int d = 0;
        for (const auto& [m, c] : terms) {
            auto it = m.find(x);
            if (it != m.end()) d = std::max(d, it->second);
        }
        return d;
    }
    int min_degree_in(const std::string& x) const {
        int d = 0;
        for (const auto& [m, c] : terms) {
            auto it = m.find(x);
            if (it != m.end()) d = std::min(d, it->second);
        }
        return d;
    }

    void add_term(const Mono& m, const Gauss& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const {
        Poly r;
        for (const auto& [m, c] : terms) r.terms[m] = -c;
        return r;
    }
    static Mono mono_mul(const Mono& a, const Mono& b) {
        Mono r = a;
        for (const auto& [x, e] : b) {
            int v = (r[x] += e);
            if (v == 0) r.erase(x);
        }
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms)
            for (const auto& [mb, cb] : b.terms) r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms == b.terms; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Division by a monomial (exact in the Laurent ring).
    std::optional<Poly> div_monomial(const Poly& d) const {
        if (!d.is_monomial()) return std::nullopt;
        const auto& [dm, dc] = *d.terms.begin();
        Mono inv;
        for (const auto& [x, e] : dm) inv[x] = -e;
        Poly r;
        Gauss ic = Gauss(1) / dc;
        for (const auto& [m, c] : terms) r.add_term(mono_mul(m, inv), c * ic);
        return r;
    }

    Poly pow(int e) const {
        if (e < 0) {
            auto r = Poly(1).div_monomial(*this);
            if (!r) throw std::domain_error("negative power of non-monomial");
            return r->pow(-e);
        }
        Poly r(1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    Poly substitute(const std::string& x, const Poly& value) const {
        Poly r;
        for (const auto& [m, c] : terms) {
            Mono rest = m;
            int e = 0;
            auto it = rest.find(x);
            if (it != rest.end()) {
                e = it->second;
                rest.erase(it);
            }
            Poly t = Poly::monomial(rest, c);
            if (e != 0) t *= value.pow(e);
            r += t;
        }
        return r;
    }

    Gauss evaluate(const std::map<std::string, Gauss>& env) const {
        Gauss s;
        for (const auto& [m, c] : terms) {
            Gauss t = c;
            for (const auto& [x, e] : m) {
                auto it = env.find(x);
                if (it == env.end()) throw std::invalid_argument("unbound variable " + x);
                t *= sba::pow(it->second, e);
            }
            s += t;
        }
        return s;
    }

    // Coefficients of x^k (k may be negative) as polynomials free of x.
    std::map<int, Poly> coefficients_in(const std::string& x) const {
        std::map<int, Poly> out;
        for (const auto& [m, c] : terms) {
            Mono rest = m;
            int e = 0;
            auto it = rest.find(x);
            if (it != rest.end()) {
                e = it->second;
                rest.erase(it);
            }
            out[e].add_term(rest, c);
        }
        return out;
    }
};

inline std::string to_string(const Poly::Mono& m) {
    std::string s;
    for (const auto& [x, e] : m) {
        if (!s.empty()) s += "*";
        s += x;
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

inline std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : p.terms) {
        std::string cs = to_string(c);
        bool complex = !c.is_real() && sgn(c.re) != 0;
        if (complex) cs = "(" + cs + ")";
        std::string term;
        if (m.empty()) term = cs;
        else if (c.is_one()) term = to_string(m);
        else if (c == Gauss(-1)) term = "-" + to_string(m);
        else term = cs + "*" + to_string(m);
        if (!s.empty()) s += (term[0] == '-') ? " - " + term.substr(1) : " + " + term;
        else s = term;
    }
    return s;
}

}  // namespace sba
