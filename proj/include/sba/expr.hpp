#pragma once

#include <cctype>
#include <string>

#include "polynomial.hpp"

namespace sba {

// Recursive-descent parser for expressions over Q(i) in named parameters:
// numbers, `i`, identifiers, + - * / ^ and parentheses. Division is allowed by
// monomials only, so every expression is a Laurent polynomial.
class ExprParser {
  public:
    ExprParser(const std::string& text, int line = 1, int col = 1) : s_(text), line_(line), col_(col) {}

    Poly parse() {
        Poly p = sum();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

  private:
    const std::string& s_;
    size_t pos_ = 0;
    int line_, col_;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_, col_ + static_cast<int>(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }
    Poly sum() {
        Poly acc;
        bool first = true;
        while (true) {
            int sign = 1;
            if (eat('-')) sign = -1;
            else if (!first && !eat('+')) break;
            else if (first) eat('+');
            Poly t = product();
            acc += sign < 0 ? -t : t;
            first = false;
        }
        return acc;
    }
    Poly product() {
        Poly acc = power();
        while (true) {
            if (eat('*')) acc *= power();
            else if (eat('/')) {
                size_t at = pos_;
                Poly d = power();
                auto q = acc.div_monomial(d);
                if (!q) {
                    pos_ = at;
                    fail(d.is_zero() ? "division by zero" : "division by a non-monomial expression");
                }
                acc = *q;
            } else break;
        }
        return acc;
    }
    Poly power() {
        Poly b = atom();
        if (eat('^')) {
            int sign = eat('-') ? -1 : 1;
            skip();
            size_t st = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (st == pos_) fail("expected integer exponent");
            int e = sign * std::stoi(s_.substr(st, pos_ - st));
            if (e < 0 && !b.is_monomial()) fail("negative power of a non-monomial");
            b = b.pow(e);
        }
        return b;
    }
    Poly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = sum();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (c == '-') {
            ++pos_;
            return -power();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t st = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Poly(Gauss(Rational(mpz_class(s_.substr(st, pos_ - st)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t st = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string id = s_.substr(st, pos_ - st);
            if (id == "i") return Poly(Gauss::i());
            return Poly::var(id);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

inline Poly parse_expr(const std::string& text, int line = 1, int col = 1) {
    return ExprParser(text, line, col).parse();
}

}  // namespace sba
