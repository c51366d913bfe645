#pragma once

// Small-modulus number theory: trial-division factorization, totient,
// Moebius, exact rational roots and the radical condition on alpha.

#include "trigrat/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace trigrat {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Trial division. n >= 1; factorize(1) is empty.
inline std::vector<PrimePower> factorize(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("factorize: n must be >= 1");
    std::vector<PrimePower> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1)
        out.push_back({n, 1});
    return out;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (const auto& pp : factorize(n))
        out.push_back(pp.prime);
    return out;
}

/// All positive divisors of n in increasing order.
inline std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        std::uint64_t pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::uint64_t euler_phi(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("euler_phi: n must be >= 1");
    std::uint64_t phi = n;
    for (const auto& pp : factorize(n))
        phi = phi / pp.prime * (pp.prime - 1);
    return phi;
}

inline int mobius(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("mobius: n must be >= 1");
    int mu = 1;
    for (const auto& pp : factorize(n)) {
        if (pp.exponent > 1)
            return 0;
        mu = -mu;
    }
    return mu;
}

inline std::uint64_t lcm(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

/// Exact n-th root of a non-negative integer, if it exists.
inline std::optional<Integer> exact_integer_root(const Integer& value, std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("exact_integer_root: n must be >= 1");
    if (value < 0)
        throw std::domain_error("exact_integer_root: negative radicand");
    Integer root;
    if (mpz_root(root.get_mpz_t(), value.get_mpz_t(), n) != 0)
        return root;
    return std::nullopt;
}

/// The positive rational r with r^n == alpha, or nullopt.
inline std::optional<Rational> nth_root_rational(const Rational& alpha, std::uint64_t n)
{
    if (alpha.sign() <= 0)
        throw std::domain_error("nth_root_rational: alpha must be positive");
    if (n == 0)
        throw std::invalid_argument("nth_root_rational: n must be >= 1");
    auto num = exact_integer_root(alpha.numerator(), n);
    if (!num)
        return std::nullopt;
    auto den = exact_integer_root(alpha.denominator(), n);
    if (!den)
        return std::nullopt;
    return Rational(*num, *den);
}

/// True iff alpha^(k/n) is irrational for every 1 <= k <= n-1.
///
/// alpha^(k/n) is rational iff alpha is a perfect (n/gcd(k,n))-th power,
/// so it suffices to test the prime divisors of n.
inline bool radical_condition(const Rational& alpha, std::uint64_t n)
{
    if (alpha.sign() <= 0)
        throw std::domain_error("radical_condition: alpha must be positive");
    if (n < 2)
        throw std::invalid_argument("radical_condition: n must be >= 2");
    for (std::uint64_t r : prime_divisors(n))
        if (nth_root_rational(alpha, r))
            return false;
    return true;
}

/// Largest divisor e of n such that alpha is a perfect e-th power, with the root.
inline std::pair<std::uint64_t, Rational> largest_perfect_power_divisor(const Rational& alpha, std::uint64_t n)
{
    auto ds = divisors(n);
    for (auto it = ds.rbegin(); it != ds.rend(); ++it)
        if (auto root = nth_root_rational(alpha, *it))
            return {*it, *root};
    return {1, alpha};
}

struct SquarefreeDecomposition {
    Rational root;          // r > 0
    std::uint64_t radicand; // d >= 1, squarefree
};

/// alpha = root^2 * radicand with radicand squarefree.
inline SquarefreeDecomposition squarefree_decompose(const Rational& alpha)
{
    if (alpha.sign() <= 0)
        throw std::domain_error("squarefree_decompose: alpha must be positive");
    // alpha = a/b = (a*b)/b^2
    Integer ab = alpha.numerator() * alpha.denominator();
    if (!ab.fits_ulong_p())
        throw std::domain_error("squarefree_decompose: numerator*denominator too large for trial division");
    std::uint64_t d = 1;
    Integer square_root = 1;
    for (const auto& [p, e] : factorize(ab.get_ui())) {
        if (e % 2 == 1)
            d *= p;
        Integer pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), p, e / 2);
        square_root *= pk;
    }
    return {Rational(square_root, alpha.denominator()), d};
}

} // namespace trigrat
