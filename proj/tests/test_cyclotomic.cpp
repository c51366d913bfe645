#include "trigrat/cyc_poly.hpp"
#include "trigrat/cyclotomic.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <thread>

using namespace trigrat;

namespace {

// Independent oracle: expand prod_{gcd(k,m)=1} (x - e^{2 pi i k/m}) in
// floating point and round to integers.
std::vector<long> cyclotomic_by_roots(std::uint64_t m)
{
    std::vector<std::complex<double>> poly{1.0};
    for (std::uint64_t k = 1; k <= m; ++k) {
        if (std::gcd(k, m) != 1)
            continue;
        auto root = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m));
        std::vector<std::complex<double>> next(poly.size() + 1);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= root * poly[i];
        }
        poly = std::move(next);
    }
    std::vector<long> out;
    for (const auto& c : poly)
        out.push_back(std::lround(c.real()));
    return out;
}

CycElem random_elem(std::uint64_t m, std::mt19937& rng)
{
    std::uniform_int_distribution<long> num(-6, 6), den(1, 5);
    std::vector<Rational> c(euler_phi(m));
    for (auto& x : c)
        x = Rational(num(rng), den(rng));
    return CycElem(m, std::move(c));
}

bool near(std::complex<double> a, std::complex<double> b)
{
    return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)) || std::abs(a - b) <= 1e-12;
}

CycElem sqrt2() { return zeta_power(8, 1) + zeta_power(8, -1); }

} // namespace

TEST(CyclotomicPolynomial, SmallCases)
{
    EXPECT_EQ(cyclotomic_polynomial(1), (RatPoly{Rational(-1), Rational(1)}));
    EXPECT_EQ(cyclotomic_polynomial(4), (RatPoly{Rational(1), Rational(0), Rational(1)}));
    EXPECT_EQ(cyclotomic_polynomial(8), (RatPoly{Rational(1), Rational(0), Rational(0), Rational(0), Rational(1)}));
    EXPECT_THROW(cyclotomic_polynomial(0), std::invalid_argument);
}

TEST(CyclotomicPolynomial, MatchesRootProductOracle)
{
    for (std::uint64_t m = 1; m <= 60; ++m) {
        const auto& phi = cyclotomic_polynomial(m);
        auto oracle = cyclotomic_by_roots(m);
        ASSERT_EQ(phi.coeffs().size(), oracle.size()) << m;
        for (std::size_t i = 0; i < oracle.size(); ++i)
            ASSERT_EQ(phi.coeff(i), Rational(oracle[i])) << "m=" << m << " i=" << i;
    }
}

TEST(CyclotomicPolynomial, StructureAndDivisorProduct)
{
    for (std::uint64_t m = 1; m <= 100; ++m) {
        const auto& phi = cyclotomic_polynomial(m);
        ASSERT_TRUE(phi.is_monic());
        ASSERT_TRUE(phi.has_integer_coeffs());
        ASSERT_EQ(static_cast<std::uint64_t>(phi.degree()), euler_phi(m));
        RatPoly prod{Rational(1)};
        for (std::uint64_t d : divisors(m))
            prod = prod * cyclotomic_polynomial(d);
        ASSERT_EQ(prod, RatPoly::binomial(m, Rational(1))) << m;
    }
}

TEST(ZetaPower, Examples)
{
    EXPECT_EQ(zeta_power(4, 2), CycElem(4, Rational(-1)));
    for (std::uint64_t m : {1u, 2u, 7u, 12u})
        EXPECT_EQ(zeta_power(m, 0), CycElem(m, Rational(1)));
    EXPECT_EQ(zeta_power(8, -1).coeffs(), (std::vector<Rational>{0, 0, 0, -1}));
    EXPECT_EQ(zeta_power(9, 9 * 5 + 2), zeta_power(9, 2));
}

TEST(CycElem, ArithmeticExamples)
{
    EXPECT_EQ(sqrt2() * sqrt2(), CycElem(8, Rational(2)));
    CycElem x = sqrt2();
    EXPECT_EQ(x + CycElem(8), x);
    EXPECT_EQ(zeta_power(5, 1) * zeta_power(5, 4), CycElem(5, Rational(1)));
    EXPECT_THROW(zeta_power(5, 1) + zeta_power(10, 1), std::invalid_argument);
    EXPECT_THROW((void)(zeta_power(5, 1) == zeta_power(10, 1)), std::invalid_argument);
    EXPECT_THROW(CycElem(8, std::vector<Rational>{1, 2}), std::invalid_argument);
}

TEST(CycElem, InverseExamples)
{
    EXPECT_EQ(CycElem(7, Rational(1)).inverse(), CycElem(7, Rational(1)));
    for (std::uint64_t m : {3u, 8u, 15u})
        EXPECT_EQ(zeta_power(m, 1).inverse(), zeta_power(m, static_cast<long long>(m) - 1));
    EXPECT_EQ(sqrt2().inverse(), sqrt2() * Rational(1, 2));
    EXPECT_THROW(CycElem(8).inverse(), std::domain_error);
}

TEST(CycElem, FieldAxiomsOnRandomElements)
{
    std::mt19937 rng(2024);
    for (std::uint64_t m = 1; m <= 40; ++m) {
        for (int trial = 0; trial < 3; ++trial) {
            CycElem a = random_elem(m, rng), b = random_elem(m, rng), c = random_elem(m, rng);
            ASSERT_EQ((a * b) * c, a * (b * c)) << m;
            ASSERT_EQ((a + b) + c, a + (b + c));
            ASSERT_EQ(a * b, b * a);
            ASSERT_EQ(a + b, b + a);
            ASSERT_EQ(a * (b + c), a * b + a * c);
            if (!a.is_zero()) {
                ASSERT_EQ(a * a.inverse(), CycElem(m, Rational(1))) << m;
            }
        }
    }
}

TEST(CycElem, NumericEvaluationTracksProducts)
{
    std::mt19937 rng(99);
    for (std::uint64_t m = 1; m <= 40; ++m) {
        CycElem a = random_elem(m, rng), b = random_elem(m, rng);
        ASSERT_TRUE(near(numeric_eval(a * b), numeric_eval(a) * numeric_eval(b))) << m;
    }
    EXPECT_TRUE(near(numeric_eval(CycElem(5, Rational(1))), {1.0, 0.0}));
    EXPECT_TRUE(near(numeric_eval(zeta_power(4, 1)), {0.0, 1.0}));
    EXPECT_NEAR(numeric_eval(sqrt2()).real(), 1.41421356, 1e-8);
}

TEST(Galois, Examples)
{
    CycElem x = zeta_power(12, 5) + zeta_power(12, 2) * Rational(3);
    EXPECT_EQ(galois_apply(1, x), x);
    for (std::uint64_t c : units_mod(12))
        EXPECT_EQ(galois_apply(c, CycElem(12, Rational(-7, 3))), CycElem(12, Rational(-7, 3)));
    EXPECT_EQ(galois_apply(3, sqrt2()), -sqrt2());
    EXPECT_THROW(galois_apply(2, sqrt2()), std::invalid_argument);
}

TEST(Galois, ActionIsAHomomorphismOfAutomorphisms)
{
    std::mt19937 rng(5);
    for (std::uint64_t m : {5u, 7u, 8u, 9u, 12u, 15u, 16u, 20u, 21u, 24u}) {
        CycElem x = random_elem(m, rng), y = random_elem(m, rng);
        for (std::uint64_t c1 : units_mod(m))
            for (std::uint64_t c2 : units_mod(m)) {
                ASSERT_EQ(galois_apply(c1, galois_apply(c2, x)), galois_apply(c1 * c2 % m, x));
            }
        for (std::uint64_t c : units_mod(m)) {
            ASSERT_EQ(galois_apply(c, x + y), galois_apply(c, x) + galois_apply(c, y));
            ASSERT_EQ(galois_apply(c, x * y), galois_apply(c, x) * galois_apply(c, y));
        }
    }
}

TEST(Galois, RationalsAreFixed)
{
    std::mt19937 rng(8);
    for (std::uint64_t m = 1; m <= 30; ++m) {
        CycElem x = random_elem(m, rng);
        // make a rational: the trace, i.e. the sum over the Galois orbit with multiplicity
        CycElem tr(m);
        for (std::uint64_t c : units_mod(m))
            tr += galois_apply(c, x);
        auto r = as_rational(tr);
        ASSERT_TRUE(r.has_value()) << m;
        for (std::uint64_t c : units_mod(m))
            ASSERT_EQ(galois_apply(c, tr), tr);
    }
}

TEST(AsRational, Examples)
{
    EXPECT_EQ(as_rational(CycElem(9, Rational(1, 2))), Rational(1, 2));
    EXPECT_FALSE(as_rational(zeta_power(8, 1)));
    EXPECT_EQ(as_rational(sqrt2() * sqrt2()), Rational(2));
}

TEST(IsReal, Examples)
{
    EXPECT_TRUE(is_real(sqrt2()));
    EXPECT_FALSE(is_real(zeta_power(4, 1)));
    EXPECT_TRUE(is_real(CycElem(12, Rational(5))));
    EXPECT_TRUE(is_real(zeta_power(2, 1)));
}

TEST(Embed, Examples)
{
    EXPECT_EQ(embed(CycElem(3, Rational(2, 3)), 12), CycElem(12, Rational(2, 3)));
    EXPECT_EQ(embed(zeta_power(4, 1), 8), zeta_power(8, 2));
    CycElem s24 = embed(sqrt2(), 24);
    EXPECT_EQ(as_rational(s24 * s24), Rational(2));
    EXPECT_THROW(embed(sqrt2(), 12), std::invalid_argument);
}

TEST(Embed, PreservesValuesAndArithmetic)
{
    std::mt19937 rng(31);
    for (std::uint64_t m : {3u, 4u, 5u, 8u, 12u}) {
        for (std::uint64_t k : {2u, 3u, 5u}) {
            CycElem x = random_elem(m, rng), y = random_elem(m, rng);
            ASSERT_TRUE(near(numeric_eval(embed(x, m * k)), numeric_eval(x)));
            ASSERT_EQ(embed(x * y, m * k), embed(x, m * k) * embed(y, m * k));
        }
    }
}

TEST(RestrictTo, InvertsEmbedAndDetectsNonMembers)
{
    std::mt19937 rng(17);
    for (std::uint64_t m : {3u, 4u, 5u, 8u}) {
        CycElem x = random_elem(m, rng);
        auto back = embed(x, 4 * m).restrict_to(m);
        ASSERT_TRUE(back.has_value());
        ASSERT_EQ(*back, x);
    }
    EXPECT_FALSE(zeta_power(8, 1).restrict_to(4).has_value());
    EXPECT_FALSE(sqrt2().embed(24).restrict_to(12).has_value());
}

TEST(MinimalPolynomial, Examples)
{
    EXPECT_EQ(minimal_polynomial(CycElem(6, Rational(3, 5))), (RatPoly{Rational(-3, 5), Rational(1)}));
    EXPECT_EQ(minimal_polynomial(zeta_power(4, 1)), (RatPoly{Rational(1), Rational(0), Rational(1)}));
    // cos(pi/5) = (zeta_10 + zeta_10^-1)/2
    CycElem c = (zeta_power(10, 1) + zeta_power(10, -1)) * Rational(1, 2);
    RatPoly mp = minimal_polynomial(c);
    EXPECT_EQ(mp, (RatPoly{Rational(-1, 4), Rational(-1, 2), Rational(1)}));
    double cos36 = std::cos(std::numbers::pi / 5);
    EXPECT_NEAR(cos36, 0.8090, 1e-4);
    EXPECT_NEAR(cos36 * cos36 - 0.5 * cos36 - 0.25, 0.0, 1e-12);
}

TEST(MinimalPolynomial, VanishesAtElementAndHasOrbitDegree)
{
    std::mt19937 rng(3);
    for (std::uint64_t m : {5u, 7u, 8u, 9u, 12u, 16u}) {
        CycElem x = random_elem(m, rng);
        RatPoly mp = minimal_polynomial(x);
        ASSERT_TRUE(mp.is_monic());
        ASSERT_TRUE(CycPoly::lift(m, mp).evaluate(x).is_zero());
        ASSERT_EQ(static_cast<std::size_t>(mp.degree()), galois_orbit(x).size());
    }
    EXPECT_EQ(minimal_polynomial(sqrt2()), (RatPoly{Rational(-2), Rational(0), Rational(1)}));
}

TEST(FieldCache, ConcurrentFirstUseIsConsistent)
{
    std::vector<std::thread> pool;
    std::vector<RatPoly> got(8);
    for (int t = 0; t < 8; ++t)
        pool.emplace_back([&, t] { got[t] = cyclotomic_polynomial(210); });
    for (auto& th : pool)
        th.join();
    for (const auto& p : got)
        EXPECT_EQ(p, got[0]);
    EXPECT_EQ(static_cast<std::uint64_t>(got[0].degree()), euler_phi(210));
}
