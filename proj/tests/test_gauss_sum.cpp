#include "trigrat/gauss_sum.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

using namespace trigrat;

namespace {

// floating-point sum, independent of the field arithmetic
std::complex<double> gauss_numeric(std::uint64_t m)
{
    std::complex<double> acc = 0;
    for (std::uint64_t k = 0; k < m; ++k)
        acc += std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k * k % m) / static_cast<double>(m));
    return acc;
}

std::complex<double> closed_form(std::uint64_t m)
{
    const double r = std::sqrt(static_cast<double>(m));
    switch (m % 4) {
    case 0: return {r, r};
    case 1: return {r, 0};
    case 2: return {0, 0};
    default: return {0, r};
    }
}

} // namespace

TEST(GaussSum, Examples)
{
    EXPECT_EQ(gauss_sum(1).as_rational(), Rational(1));
    EXPECT_EQ((gauss_sum(5) * gauss_sum(5)).as_rational(), Rational(5));
    EXPECT_TRUE(gauss_sum(6).is_zero());
    EXPECT_TRUE(gauss_sum_case_check(5));
    EXPECT_TRUE(gauss_sum_case_check(3));
    EXPECT_TRUE(gauss_sum_case_check(8));
    EXPECT_THROW(gauss_sum(0), std::invalid_argument);
}

TEST(GaussSum, CaseCheckAndNumericsUpToSixty)
{
    for (std::uint64_t m = 1; m <= 60; ++m) {
        EXPECT_TRUE(gauss_sum_case_check(m)) << m;
        auto exact = gauss_sum(m).numeric();
        auto direct = gauss_numeric(m);
        auto expected = closed_form(m);
        EXPECT_NEAR(std::abs(exact - direct), 0.0, 1e-9) << m;
        EXPECT_NEAR(std::abs(exact - expected), 0.0, 1e-9) << m;
    }
}

TEST(SqrtInCyclotomic, Examples)
{
    auto r = sqrt_in_cyclotomic(Rational(9, 4));
    EXPECT_EQ(r.modulus, 1u);
    EXPECT_EQ(r.witness.as_rational(), Rational(3, 2));

    r = sqrt_in_cyclotomic(Rational(2));
    EXPECT_EQ(r.modulus, 8u);
    EXPECT_EQ(r.witness, zeta_power(8, 1) + zeta_power(8, -1));

    r = sqrt_in_cyclotomic(Rational(15));
    EXPECT_EQ(r.modulus, 60u);
    EXPECT_EQ(r.witness * r.witness, CycElem(60, Rational(15)));

    EXPECT_EQ(sqrt_in_cyclotomic(Rational(5)).modulus, 5u);
    EXPECT_EQ(sqrt_in_cyclotomic(Rational(3)).modulus, 12u);
    EXPECT_EQ(sqrt_in_cyclotomic(Rational(1, 2)).modulus, 8u);
    EXPECT_THROW(sqrt_in_cyclotomic(Rational(-3)), std::domain_error);
}

TEST(SqrtInCyclotomic, PositiveSquareRootInMinimalField)
{
    for (long a = 1; a <= 40; ++a)
        for (long b : {1L, 2L, 3L, 7L}) {
            Rational alpha(a, b);
            auto r = sqrt_in_cyclotomic(alpha);
            ASSERT_EQ(r.witness * r.witness, CycElem(r.modulus, alpha)) << alpha;
            auto z = r.witness.numeric();
            ASSERT_NEAR(z.imag(), 0.0, 1e-9);
            ASSERT_NEAR(z.real(), std::sqrt(alpha.to_double()), 1e-9) << alpha;
            // no proper subfield Q(zeta_d) with d | m, d != m, d != m/2 (for m = 2 mod 4) holds it
            for (std::uint64_t d : divisors(r.modulus)) {
                if (d == r.modulus || 2 * d == r.modulus)
                    continue;
                ASSERT_FALSE(r.witness.restrict_to(d)) << alpha << " lives in Q(zeta_" << d << ")";
            }
        }
}
