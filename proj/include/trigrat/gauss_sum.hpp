#pragma once

/**
 * @file gauss_sum.hpp
 * @brief Quadratic Gauss sums and explicit square roots inside cyclotomic fields.
 *
 * g(m) = sum_{k=0}^{m-1} zeta_m^{k^2} evaluates to
 *
 *     (1+i) sqrt(m)   m = 0 mod 4
 *     sqrt(m)         m = 1 mod 4
 *     0               m = 2 mod 4
 *     i sqrt(m)       m = 3 mod 4
 *
 * so for an odd prime p, g(p) or g(p)/i is +sqrt(p) in Q(zeta_p) or Q(zeta_4p),
 * and zeta_8 + zeta_8^-1 = sqrt(2). Products of these give sqrt(alpha) for
 * every positive rational alpha, in the smallest cyclotomic field containing it.
 */

#include "trigrat/cyclotomic.hpp"
#include "trigrat/number_theory.hpp"
#include "trigrat/rational.hpp"

#include <cstdint>
#include <stdexcept>

namespace trigrat {

inline CycElem gauss_sum(std::uint64_t m)
{
    if (m == 0)
        throw std::invalid_argument("gauss_sum: m must be >= 1");
    std::vector<Rational> counts(m);
    for (std::uint64_t k = 0; k < m; ++k)
        counts[k * k % m] += Rational(1);
    CycElem acc(m);
    for (std::uint64_t e = 0; e < m; ++e)
        if (!counts[e].is_zero())
            acc += zeta_power(m, static_cast<long long>(e)) * counts[e];
    return acc;
}

/// Checks the residue-class evaluation of g(m) exactly in Q(zeta_lcm(m,4)),
/// comparing squares where the value itself carries sqrt(m).
inline bool gauss_sum_case_check(std::uint64_t m)
{
    const std::uint64_t big = lcm(m, 4);
    const CycElem g = gauss_sum(m).embed(big);
    const CycElem g2 = g * g;
    const Rational mm(Integer(static_cast<unsigned long>(m)));
    switch (m % 4) {
    case 0: return g2 == zeta_power(big, static_cast<long long>(big / 4)) * (Rational(2) * mm);
    case 1: return g2 == CycElem(big, mm);
    case 2: return g.is_zero();
    default: return g2 == CycElem(big, -mm);
    }
}

struct SqrtEmbedding {
    std::uint64_t modulus;
    CycElem witness; // positive real, witness^2 == alpha
};

/// sqrt(alpha) as an explicit element of Q(zeta_m), m the conductor of Q(sqrt(alpha)).
inline SqrtEmbedding sqrt_in_cyclotomic(const Rational& alpha)
{
    if (alpha.sign() <= 0)
        throw std::domain_error("sqrt_in_cyclotomic: alpha must be positive");
    const auto [root, d] = squarefree_decompose(alpha);
    if (d == 1)
        return {1, CycElem(1, root)};

    const std::uint64_t odd = d % 2 == 0 ? d / 2 : d;
    // G = prod_{p | odd} g(p) = i^t sqrt(odd), t = #{p = 3 mod 4}
    std::uint64_t t = 0;
    std::uint64_t m = odd;
    CycElem acc(odd, Rational(1));
    for (std::uint64_t p : prime_divisors(odd)) {
        acc = acc * gauss_sum(p).embed(odd);
        if (p % 4 == 3)
            ++t;
    }
    if (t % 2 == 1) {
        m = 4 * odd;
        acc = acc.embed(m) * zeta_power(m, -static_cast<long long>(t % 4) * static_cast<long long>(m / 4));
    } else if (t % 4 == 2) {
        acc = -acc;
    }
    if (d % 2 == 0) {
        const std::uint64_t with_two = lcm(m, 8);
        const CycElem sqrt2 = (zeta_power(8, 1) + zeta_power(8, -1)).embed(with_two);
        acc = acc.embed(with_two) * sqrt2;
        m = with_two;
    }
    acc *= root;
    return {m, acc};
}

} // namespace trigrat
