#include <gtest/gtest.h>

#include <random>

#include "sba/series.hpp"

using namespace sba;

namespace {

Gauss random_gauss(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-30, 30), den(1, 9);
    return Gauss(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
}

Rational factorial_loop(int n) {
    Rational f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace

TEST(Rational, CanonicalForm) {
    Rational q = make_rational(-9, 6);
    EXPECT_EQ(q.get_num(), -3);
    EXPECT_EQ(q.get_den(), 2);
    EXPECT_EQ(make_rational(0, -5).get_den(), 1);
    EXPECT_EQ(make_rational(4, -8), make_rational(-1, 2));
}

TEST(Gauss, FieldAxiomsOnRandomInputs) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; ++t) {
        Gauss a = random_gauss(rng), b = random_gauss(rng), c = random_gauss(rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a.conj().conj(), a);
        if (!a.is_zero()) EXPECT_EQ(a * (Gauss(1) / a), Gauss(1));
        EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    }
}

TEST(Gauss, ImaginaryUnit) {
    EXPECT_EQ(Gauss::i() * Gauss::i(), Gauss(-1));
    EXPECT_EQ(pow(Gauss::i(), 4), Gauss(1));
    EXPECT_THROW(Gauss(1) / Gauss(0), std::domain_error);
}

TEST(Gauss, ParseScalarSyntax) {
    EXPECT_EQ(parse_scalar("3/4"), Gauss(make_rational(3, 4)));
    EXPECT_EQ(parse_scalar("i"), Gauss::i());
    EXPECT_EQ(parse_scalar("-i"), -Gauss::i());
    EXPECT_EQ(parse_scalar(" 1/2 + 3/5*i "), Gauss(make_rational(1, 2), make_rational(3, 5)));
    EXPECT_EQ(parse_scalar("-2"), Gauss(-2));
    EXPECT_THROW(parse_scalar("1/0"), ParseError);
    EXPECT_THROW(parse_scalar("1/"), ParseError);
}

TEST(Gauss, PrintParseRoundTrip) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        Gauss a = random_gauss(rng);
        EXPECT_EQ(parse_scalar(to_string(a)), a) << to_string(a);
    }
}

TEST(Series, SinhOverXLowOrders) {
    PolySeries s0 = series_sinh_over_x(0);
    ASSERT_EQ(s0.order(), 0);
    EXPECT_EQ(s0[0], Poly1::monomial(1, Gauss(1)));

    PolySeries s2 = series_sinh_over_x(2);
    EXPECT_EQ(s2[0], Poly1::monomial(1, Gauss(1)));
    EXPECT_TRUE(s2[1].is_zero());
    EXPECT_EQ(s2[2], Poly1::monomial(3, Gauss(make_rational(1, 6))));

    EXPECT_EQ(series_sinh_over_x(4)[4], Poly1::monomial(5, Gauss(make_rational(1, 120))));
    EXPECT_THROW(series_sinh_over_x(-1), std::invalid_argument);
}

// Term-by-term factorial formula as the oracle for every order up to 12.
TEST(Series, SinhOverXMatchesFactorialFormula) {
    PolySeries s = series_sinh_over_x(12);
    for (int k = 0; k <= 12; ++k) {
        if (k % 2) {
            EXPECT_TRUE(s[k].is_zero());
            continue;
        }
        EXPECT_EQ(s[k], Poly1::monomial(k + 1, Gauss(Rational(1) / factorial_loop(k + 1))));
    }
}

TEST(Series, ExpOfHalfLambdaU) {
    PolySeries e = series_exp_linear(2, Gauss(make_rational(1, 2)));
    EXPECT_EQ(e[0], Poly1::monomial(0, Gauss(1)));
    EXPECT_EQ(e[1], Poly1::monomial(1, Gauss(make_rational(1, 2))));
    EXPECT_EQ(e[2], Poly1::monomial(2, Gauss(make_rational(1, 8))));
}

TEST(Series, ExpIdentities) {
    const int N = 6;
    LambdaSeries zero(N);
    EXPECT_EQ(series_exp(zero), LambdaSeries(N, Gauss(1)));

    PolySeries unit(N);
    unit[0] = Poly1::monomial(0, Gauss(1));
    EXPECT_EQ(series_exp_linear(N, Gauss(1)) * series_exp_linear(N, Gauss(-1)), unit);

    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        LambdaSeries a(N), b(N);
        for (int k = 1; k <= N; ++k) {
            a[k] = random_gauss(rng);
            b[k] = random_gauss(rng);
        }
        EXPECT_EQ(series_exp(a) * series_exp(b), series_exp(a + b));
    }
    LambdaSeries bad(N, Gauss(1));
    EXPECT_THROW(series_exp(bad), std::invalid_argument);
}

TEST(Series, RingAxiomsModLambda) {
    const int N = 5;
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        LambdaSeries a(N), b(N), c(N);
        for (int k = 0; k <= N; ++k) {
            a[k] = random_gauss(rng);
            b[k] = random_gauss(rng);
            c[k] = random_gauss(rng);
        }
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
    }
    EXPECT_THROW(LambdaSeries(2) + LambdaSeries(3), std::invalid_argument);
}

TEST(Series, SinhcAndCoshAgreeWithSinh) {
    // u * sinhc = sinh/lambda; cosh^2 - (lambda sinh/lambda)^2 = 1
    const int N = 8;
    PolySeries u(N);
    u[0] = Poly1::monomial(1, Gauss(1));
    EXPECT_EQ(u * series_sinhc(N), series_sinh_over_x(N));
    PolySeries one(N);
    one[0] = Poly1::monomial(0, Gauss(1));
    PolySeries ls = series_sinh_over_x(N).shifted(1);
    EXPECT_EQ(series_cosh(N) * series_cosh(N) - ls * ls, one);
}
