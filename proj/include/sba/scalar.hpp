#pragma once

#include <gmpxx.h>

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <string>

namespace sba {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

// Exact element of Q(i).
struct Gauss {
    Rational re, im;

    Gauss() : re(0), im(0) {}
    Gauss(long v) : re(v), im(0) {}
    Gauss(int v) : re(v), im(0) {}
    Gauss(Rational r) : re(std::move(r)), im(0) {}
    Gauss(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Gauss i() { return Gauss(Rational(0), Rational(1)); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    bool is_one() const { return re == 1 && sgn(im) == 0; }
    Gauss conj() const { return Gauss(re, -im); }
    Rational norm2() const { return re * re + im * im; }

    Gauss& operator+=(const Gauss& o) { re += o.re; im += o.im; return *this; }
    Gauss& operator-=(const Gauss& o) { re -= o.re; im -= o.im; return *this; }
    Gauss& operator*=(const Gauss& o) {
        Rational r = re * o.re - im * o.im;
        Rational m = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(m);
        return *this;
    }
    Gauss& operator/=(const Gauss& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        Rational n = o.norm2();
        Rational r = (re * o.re + im * o.im) / n;
        Rational m = (im * o.re - re * o.im) / n;
        re = std::move(r);
        im = std::move(m);
        return *this;
    }
    Gauss operator-() const { return Gauss(-re, -im); }

    friend Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
    friend Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
    friend Gauss operator*(Gauss a, const Gauss& b) { return a *= b; }
    friend Gauss operator/(Gauss a, const Gauss& b) { return a /= b; }
    friend bool operator==(const Gauss& a, const Gauss& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }

    // Total order for use as a map key; has no algebraic meaning.
    friend bool operator<(const Gauss& a, const Gauss& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }
};

inline Gauss pow(Gauss x, long e) {
    if (e < 0) {
        x = Gauss(1) / x;
        e = -e;
    }
    Gauss r(1);
    while (e) {
        if (e & 1) r *= x;
        x *= x;
        e >>= 1;
    }
    return r;
}

inline std::string to_string(const Gauss& z) {
    if (z.is_real()) return z.re.get_str();
    std::string im;
    if (z.im == 1) im = "i";
    else if (z.im == -1) im = "-i";
    else im = z.im.get_str() + "*i";
    if (sgn(z.re) == 0) return im;
    if (im[0] == '-') return z.re.get_str() + im;
    return z.re.get_str() + "+" + im;
}

inline std::ostream& operator<<(std::ostream& os, const Gauss& z) { return os << to_string(z); }

struct ParseError : std::runtime_error {
    int line, column;
    ParseError(const std::string& msg, int l, int c)
        : std::runtime_error(msg), line(l), column(c) {}
    std::string where() const {
        return std::to_string(line) + ":" + std::to_string(column) + ": " + what();
    }
};

namespace detail {

struct ScalarLexer {
    const std::string& s;
    size_t pos = 0;
    int line, col0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line, col0 + static_cast<int>(pos));
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    Rational number() {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected number");
        Rational num(s.substr(start, pos - start));
        if (eat('/')) {
            skip();
            size_t d0 = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (d0 == pos) fail("expected denominator");
            mpz_class den(s.substr(d0, pos - d0));
            if (den == 0) fail("zero denominator");
            num /= Rational(den);
        }
        num.canonicalize();
        return num;
    }
    // term := ['-'|'+'] ( 'i' | rational ['*' 'i'] | rational 'i' )
    Gauss term(bool first) {
        int sign = 1;
        if (eat('-')) sign = -1;
        else if (!eat('+') && !first) fail("expected '+' or '-'");
        skip();
        if (pos < s.size() && s[pos] == 'i') {
            ++pos;
            return Gauss(Rational(0), Rational(sign));
        }
        Rational v = number() * sign;
        if (eat('*')) {
            skip();
            if (pos < s.size() && s[pos] == 'i') { ++pos; return Gauss(Rational(0), v); }
            fail("expected 'i' after '*'");
        }
        skip();
        if (pos < s.size() && s[pos] == 'i') { ++pos; return Gauss(Rational(0), v); }
        return Gauss(v);
    }
};

}  // namespace detail

// Accepts `a/b`, `a/b+c/d*i`, `i`, `-i`; whitespace is ignored.
inline Gauss parse_scalar(const std::string& text, int line = 1, int col = 1) {
    detail::ScalarLexer lx{text, 0, line, col};
    lx.skip();
    if (lx.pos >= text.size()) lx.fail("empty scalar");
    Gauss acc = lx.term(true);
    while (true) {
        lx.skip();
        if (lx.pos >= text.size()) break;
        acc += lx.term(false);
    }
    return acc;
}

}  // namespace sba
