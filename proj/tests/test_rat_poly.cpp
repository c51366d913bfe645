#include "trigrat/rat_poly.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace trigrat;

TEST(RatPoly, CanonicalFormDropsTrailingZeros)
{
    RatPoly p{Rational(1), Rational(0), Rational(0)};
    EXPECT_EQ(p.degree(), 0);
    EXPECT_TRUE(RatPoly{Rational(0)}.is_zero());
    EXPECT_EQ(RatPoly{}.degree(), -1);
}

TEST(RatPoly, DivmodRecomposes)
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> dist(-9, 9);
    auto random_poly = [&](int deg) {
        std::vector<Rational> c(deg + 1);
        for (auto& x : c)
            x = Rational(dist(rng), 1 + std::abs(dist(rng)));
        c.back() = Rational(1 + std::abs(dist(rng)));
        return RatPoly(c);
    };
    for (int i = 0; i < 100; ++i) {
        RatPoly a = random_poly(static_cast<int>(i % 7) + 1);
        RatPoly b = random_poly(static_cast<int>(i % 4));
        auto [q, r] = a.divmod(b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_LT(r.degree(), b.degree());
    }
    EXPECT_THROW(RatPoly{Rational(1)}.divmod(RatPoly{}), std::domain_error);
}

TEST(RatPoly, ExtendedGcdBezout)
{
    // (x^2 - 1) and (x^2 - 3x + 2) share x - 1
    RatPoly a{Rational(-1), Rational(0), Rational(1)};
    RatPoly b{Rational(2), Rational(-3), Rational(1)};
    auto eg = extended_gcd(a, b);
    EXPECT_EQ(eg.gcd, (RatPoly{Rational(-1), Rational(1)}));
    EXPECT_EQ(eg.s * a + eg.t * b, eg.gcd);
}

TEST(RatPoly, BinomialAndPrinting)
{
    EXPECT_EQ(RatPoly::binomial(6, Rational(8)).to_string(), "x^6 - 8");
    EXPECT_EQ((RatPoly{Rational(-1, 4), Rational(-1, 2), Rational(1)}.to_string("t")), "t^2 - 1/2*t - 1/4");
    EXPECT_EQ(RatPoly::binomial(6, Rational(8)).exact_div(RatPoly{Rational(-2), Rational(0), Rational(1)}),
              (RatPoly{Rational(4), Rational(0), Rational(2), Rational(0), Rational(1)}));
}
