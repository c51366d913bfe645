#pragma once

/**
 * @file binomial.hpp
 * @brief Irreducibility of x^n - alpha over Q, two ways.
 *
 * binomial_irreducible() is the arithmetic criterion: for alpha > 0 the
 * binomial is irreducible iff alpha^(k/n) is irrational for 0 < k < n.
 *
 * subset_factorization_oracle() is an independent brute-force check. The
 * roots of x^n - alpha are alpha^(1/n) * zeta_n^i for i in {1..n}; every
 * monic rational factor is the product of (x - root) over some proper
 * subset of those indices. The oracle forms each such product in floating
 * point, rounds the coefficients to nearby rationals, and accepts a
 * candidate only after exact polynomial division confirms it.
 */

#include "trigrat/cyclotomic.hpp"
#include "trigrat/cyc_poly.hpp"
#include "trigrat/number_theory.hpp"
#include "trigrat/rat_poly.hpp"
#include "trigrat/rational.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace trigrat {

inline bool binomial_irreducible(const Rational& alpha, std::uint64_t n)
{
    return radical_condition(alpha, n);
}

/// An explicit proper factor x^(n/r) - beta of x^n - alpha when alpha = beta^r
/// for a prime r dividing n; nullopt when the binomial is irreducible.
inline std::optional<RatPoly> binomial_rational_factor(const Rational& alpha, std::uint64_t n)
{
    if (alpha.sign() <= 0)
        throw std::domain_error("binomial_rational_factor: alpha must be positive");
    if (n < 2)
        throw std::invalid_argument("binomial_rational_factor: n must be >= 2");
    for (std::uint64_t r : prime_divisors(n))
        if (auto beta = nth_root_rational(alpha, r))
            return RatPoly::binomial(n / r, *beta);
    return std::nullopt;
}

/// Continued-fraction approximation of x with denominator at most max_den,
/// accepted only if within tol of x.
inline std::optional<Rational> rationalize(double x, double tol, long long max_den = 1'000'000)
{
    if (!std::isfinite(x))
        return std::nullopt;
    long long h_prev = 1, h = static_cast<long long>(std::floor(x));
    long long k_prev = 0, k = 1;
    double frac = x - std::floor(x);
    for (int iter = 0; iter < 64; ++iter) {
        if (std::abs(static_cast<double>(h) / static_cast<double>(k) - x) <= tol)
            return Rational(Integer(static_cast<long>(h)), Integer(static_cast<long>(k)));
        if (frac < 1e-15)
            break;
        double inv = 1.0 / frac;
        if (inv > static_cast<double>(max_den))
            break;
        auto a = static_cast<long long>(std::floor(inv));
        frac = inv - std::floor(inv);
        long long h_next = a * h + h_prev;
        long long k_next = a * k + k_prev;
        if (k_next > max_den)
            break;
        h_prev = std::exchange(h, h_next);
        k_prev = std::exchange(k, k_next);
    }
    return std::nullopt;
}

/// Index subset I of {1..n} encoded as a bitmask: bit (i-1) set iff i in I.
using RootSubset = std::uint32_t;

inline std::vector<unsigned> subset_indices(RootSubset mask, unsigned n)
{
    std::vector<unsigned> out;
    for (unsigned i = 1; i <= n; ++i)
        if (mask & (RootSubset{1} << (i - 1)))
            out.push_back(i);
    return out;
}

struct OracleFactor {
    RootSubset subset;
    RatPoly factor;   // f_I, monic, rational
    RatPoly cofactor; // f_J with J the complement
};

struct OracleResult {
    bool reducible = false;
    /// Every subset whose root product was confirmed as a rational factor,
    /// ordered by factor degree then by mask.
    std::vector<OracleFactor> hits;
};

/// Brute force over all 2^n - 2 proper nonempty root subsets, 2 <= n <= 12.
inline OracleResult subset_factorization_oracle(const Rational& alpha, unsigned n)
{
    if (alpha.sign() <= 0)
        throw std::domain_error("subset_factorization_oracle: alpha must be positive");
    if (n < 2 || n > 12)
        throw std::invalid_argument("subset_factorization_oracle: n must lie in [2, 12]");

    const double radius = std::pow(alpha.to_double(), 1.0 / static_cast<double>(n));
    std::vector<std::complex<double>> roots(n + 1);
    for (unsigned i = 1; i <= n; ++i)
        roots[i] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n));

    const RatPoly target = RatPoly::binomial(n, alpha);
    OracleResult result;
    const RootSubset full = (RootSubset{1} << n) - 1;
    for (unsigned size = 1; size < n; ++size) {
        for (RootSubset mask = 1; mask < full; ++mask) {
            if (static_cast<unsigned>(std::popcount(mask)) != size)
                continue;
            // expand prod (x - r_i), constant term first
            std::vector<std::complex<double>> poly{1.0};
            for (unsigned i : subset_indices(mask, n)) {
                std::vector<std::complex<double>> next(poly.size() + 1);
                for (std::size_t k = 0; k < poly.size(); ++k) {
                    next[k + 1] += poly[k];
                    next[k] -= roots[i] * poly[k];
                }
                poly = std::move(next);
            }
            std::vector<Rational> coeffs;
            bool ok = true;
            for (const auto& c : poly) {
                const double scale = 1.0 + std::abs(c);
                if (std::abs(c.imag()) > 1e-9 * scale) {
                    ok = false;
                    break;
                }
                auto r = rationalize(c.real(), 1e-9 * scale);
                if (!r) {
                    ok = false;
                    break;
                }
                coeffs.push_back(*r);
            }
            if (!ok)
                continue;
            RatPoly candidate(std::move(coeffs));
            auto [quotient, remainder] = target.divmod(candidate);
            if (!remainder.is_zero())
                continue;
            result.hits.push_back({mask, std::move(candidate), std::move(quotient)});
        }
    }
    result.reducible = !result.hits.empty();
    return result;
}

/// prod_{j in subset} zeta_n^j, computed exactly in Q(zeta_n).
inline CycElem root_index_product(RootSubset mask, unsigned n)
{
    CycElem acc(n, Rational(1));
    for (unsigned j : subset_indices(mask, n))
        acc = acc * zeta_power(n, j);
    return acc;
}

/// A rational factor's constant term forces the product of its root
/// indices' roots of unity to be +-1. Checked for the subset and its complement.
inline bool constant_term_law_holds(RootSubset mask, unsigned n)
{
    const RootSubset full = (RootSubset{1} << n) - 1;
    for (RootSubset s : {mask, static_cast<RootSubset>(full & ~mask)}) {
        auto r = root_index_product(s, n).as_rational();
        if (!r || (*r != Rational(1) && *r != Rational(-1)))
            return false;
    }
    return true;
}

/// (x^4 + first*s)(x^4 + second*s) over Q(zeta_8), s = zeta_8 + zeta_8^-1.
inline CycPoly quartic_pair_product(int first, int second)
{
    const CycElem s = zeta_power(8, 1) + zeta_power(8, -1);
    auto quartic = [&](int sign) {
        std::vector<CycElem> c(5, CycElem(8));
        c[0] = s * Rational(sign);
        c[4] = CycElem(8, Rational(1));
        return CycPoly(8, std::move(c));
    };
    return quartic(first) * quartic(second);
}

/// x^8 - 2 splits over Q(zeta_8) as (x^4 - s)(x^4 + s) although it is
/// irreducible over Q.
inline bool verify_remark_factorization()
{
    return quartic_pair_product(-1, 1) == CycPoly::lift(8, RatPoly::binomial(8, Rational(2)));
}

} // namespace trigrat
