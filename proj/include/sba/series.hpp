#pragma once

#include <stdexcept>
#include <vector>

#include "scalar.hpp"

namespace sba {

// Dense polynomial in one variable u.
struct Poly1 {
    std::vector<Gauss> c;  // c[k] is the coefficient of u^k

    Poly1() = default;
    explicit Poly1(std::vector<Gauss> v) : c(std::move(v)) { trim(); }
    static Poly1 monomial(int k, Gauss v) {
        Poly1 p;
        p.c.assign(k + 1, Gauss());
        p.c[k] = std::move(v);
        p.trim();
        return p;
    }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    Gauss at(int k) const { return k < static_cast<int>(c.size()) ? c[k] : Gauss(); }

    Poly1& operator+=(const Poly1& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size());
        for (size_t k = 0; k < o.c.size(); ++k) c[k] += o.c[k];
        trim();
        return *this;
    }
    Poly1& operator-=(const Poly1& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size());
        for (size_t k = 0; k < o.c.size(); ++k) c[k] -= o.c[k];
        trim();
        return *this;
    }
    friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
    friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
    friend Poly1 operator*(const Poly1& a, const Poly1& b) {
        if (a.is_zero() || b.is_zero()) return {};
        Poly1 r;
        r.c.assign(a.c.size() + b.c.size() - 1, Gauss());
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        r.trim();
        return r;
    }
    friend Poly1 operator*(const Gauss& s, Poly1 p) {
        for (auto& x : p.c) x *= s;
        p.trim();
        return p;
    }
    friend bool operator==(const Poly1& a, const Poly1& b) { return a.c == b.c; }
};

// Truncated power series in lambda with coefficients in T, exact mod lambda^{N+1}.
template <class T>
struct Series {
    std::vector<T> c;

    Series() = default;
    explicit Series(int order) : c(order + 1, T()) {}
    Series(int order, T constant) : c(order + 1, T()) { c[0] = std::move(constant); }

    int order() const { return static_cast<int>(c.size()) - 1; }
    const T& operator[](int k) const { return c[k]; }
    T& operator[](int k) { return c[k]; }

    bool is_zero() const {
        for (const auto& x : c)
            if (!is_zero_value(x)) return false;
        return true;
    }
    static bool is_zero_value(const T& x) { return x.is_zero(); }

    Series& operator+=(const Series& o) {
        check(o);
        for (size_t k = 0; k < c.size(); ++k) c[k] += o.c[k];
        return *this;
    }
    Series& operator-=(const Series& o) {
        check(o);
        for (size_t k = 0; k < c.size(); ++k) c[k] -= o.c[k];
        return *this;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    Series operator-() const {
        Series r(order());
        for (size_t k = 0; k < c.size(); ++k) r.c[k] = T() - c[k];
        return r;
    }
    friend Series operator*(const Series& a, const Series& b) {
        a.check(b);
        Series r(a.order());
        for (int i = 0; i <= a.order(); ++i) {
            if (is_zero_value(a.c[i])) continue;
            for (int j = 0; i + j <= a.order(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        }
        return r;
    }
    Series scaled(const Gauss& s) const {
        Series r = *this;
        for (auto& x : r.c) x = s * x;
        return r;
    }
    // Multiply by lambda^k.
    Series shifted(int k) const {
        Series r(order());
        for (int i = 0; i + k <= order(); ++i) r.c[i + k] = c[i];
        return r;
    }
    friend bool operator==(const Series& a, const Series& b) { return a.c == b.c; }

  private:
    void check(const Series& o) const {
        if (o.c.size() != c.size()) throw std::invalid_argument("series order mismatch");
    }
};

using LambdaSeries = Series<Gauss>;
using PolySeries = Series<Poly1>;

inline Rational factorial(int n) {
    mpz_class f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return Rational(f);
}

// sinh(lambda u)/lambda = sum_m lambda^{2m} u^{2m+1}/(2m+1)!
inline PolySeries series_sinh_over_x(int N) {
    if (N < 0) throw std::invalid_argument("negative order");
    PolySeries s(N);
    for (int k = 0; k <= N; k += 2) s[k] = Poly1::monomial(k + 1, Gauss(Rational(1) / factorial(k + 1)));
    return s;
}

// cosh(lambda u) = sum_m lambda^{2m} u^{2m}/(2m)!
inline PolySeries series_cosh(int N) {
    PolySeries s(N);
    for (int k = 0; k <= N; k += 2) s[k] = Poly1::monomial(k, Gauss(Rational(1) / factorial(k)));
    return s;
}

// sinh(lambda u)/(lambda u) = sum_m lambda^{2m} u^{2m}/(2m+1)!
inline PolySeries series_sinhc(int N) {
    PolySeries s(N);
    for (int k = 0; k <= N; k += 2) s[k] = Poly1::monomial(k, Gauss(Rational(1) / factorial(k + 1)));
    return s;
}

template <class T>
T unit_of();
template <>
inline Gauss unit_of<Gauss>() { return Gauss(1); }
template <>
inline Poly1 unit_of<Poly1>() { return Poly1({Gauss(1)}); }

// The constant-term-free argument keeps every power of a inside the truncation.
template <class T>
Series<T> series_exp(const Series<T>& a) {
    if (!Series<T>::is_zero_value(a[0]))
        throw std::invalid_argument("series_exp: nonzero constant term");
    int N = a.order();
    Series<T> result(N);
    Series<T> term(N);
    result[0] = unit_of<T>();
    term[0] = unit_of<T>();
    for (int k = 1; k <= N; ++k) {
        term = term * a;
        term = term.scaled(Gauss(Rational(1, k)));
        result += term;
    }
    return result;
}

// exp(s * lambda * u) as a polynomial-in-u template.
inline PolySeries series_exp_linear(int N, const Gauss& s) {
    PolySeries a(N);
    if (N >= 1) a[1] = Poly1::monomial(1, s);
    return series_exp(a);
}

// (1 - e^{-2 lambda u})/(2 lambda); 1 - e^{-2lu} = -sum_{m>=1} (-2lu)^m/m!
inline PolySeries series_one_minus_exp_over_2x(int N) {
    PolySeries s(N);
    for (int k = 0; k <= N; ++k) {
        int m = k + 1;
        Rational coeff = -Rational(mpz_class(1)) / factorial(m);
        mpz_class p = 1;
        for (int t = 0; t < m; ++t) p *= -2;
        coeff *= Rational(p);
        coeff /= 2;
        s[k] = Poly1::monomial(m, Gauss(coeff));
    }
    return s;
}

// Evaluate a polynomial-in-u template at u = 0.
inline LambdaSeries at_zero(const PolySeries& s) {
    LambdaSeries r(s.order());
    for (int k = 0; k <= s.order(); ++k) r[k] = s[k].at(0);
    return r;
}

}  // namespace sba
