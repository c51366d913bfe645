#pragma once

// Does Q(zeta_m) contain the positive real n-th root of alpha?
//
// After pulling out the largest exact power (alpha = beta^e, e | n), the
// reduced exponent n' = n/e satisfies the radical condition for beta. Then:
//   n' = 1  -> yes, the root is rational;
//   n' = 2  -> decided exactly: sqrt(beta) is built in its own cyclotomic
//              field, both fields are embedded in Q(zeta_L), and the root lies
//              in Q(zeta_m) iff it is fixed by every tau_c with c = 1 mod m;
//   n' >= 3 -> no. No cyclotomic field contains such a root, since its
//              normal closure has non-abelian Galois group.

#include "trigrat/cyclotomic.hpp"
#include "trigrat/gauss_sum.hpp"
#include "trigrat/number_theory.hpp"
#include "trigrat/rational.hpp"

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace trigrat {

enum class MembershipAnswer { Yes, No };

enum class MembershipReason {
    ConstructedWitness,   // explicit element built and verified
    GaloisInvariance,     // decided by the fixed-field test
    NoHigherRadical,      // n' >= 3: excluded for every cyclotomic field
    ExponentReduced,      // alpha was an exact power; the root is rational
};

inline std::string_view to_string(MembershipAnswer a) { return a == MembershipAnswer::Yes ? "YES" : "NO"; }

inline std::string_view to_string(MembershipReason r)
{
    switch (r) {
    case MembershipReason::ConstructedWitness: return "CONSTRUCTED_WITNESS";
    case MembershipReason::GaloisInvariance: return "GALOIS_INVARIANCE";
    case MembershipReason::NoHigherRadical: return "NO_HIGHER_RADICAL";
    case MembershipReason::ExponentReduced: return "EXPONENT_REDUCED";
    }
    return "?";
}

struct RootMembershipVerdict {
    MembershipAnswer answer;
    MembershipReason justification;
    std::optional<CycElem> witness; // in Q(zeta_m); witness^n == alpha
    std::uint64_t reduced_n;        // exponent after pulling out exact powers
    Rational reduced_alpha;
};

/// Q(zeta_m) == Q(zeta_{m/2}) for m = 2 mod 4.
inline std::uint64_t normalize_modulus(std::uint64_t m) { return m % 4 == 2 ? m / 2 : m; }

inline RootMembershipVerdict nth_root_in_cyclotomic(const Rational& alpha, std::uint64_t n, std::uint64_t m)
{
    if (alpha.sign() <= 0)
        throw std::domain_error("nth_root_in_cyclotomic: alpha must be positive");
    if (n == 0 || m == 0)
        throw std::invalid_argument("nth_root_in_cyclotomic: n and m must be >= 1");

    const auto [e, beta] = largest_perfect_power_divisor(alpha, n);
    const std::uint64_t reduced = n / e;
    const bool was_reduced = e > 1;

    auto checked_yes = [&](CycElem w, MembershipReason why) {
        if (!(pow(w, n) == CycElem(m, alpha)))
            throw std::logic_error("nth_root_in_cyclotomic: witness does not verify");
        return RootMembershipVerdict{MembershipAnswer::Yes, why, std::move(w), reduced, beta};
    };

    if (reduced == 1)
        return checked_yes(CycElem(m, beta),
                           was_reduced ? MembershipReason::ExponentReduced : MembershipReason::ConstructedWitness);

    if (reduced >= 3)
        return {MembershipAnswer::No, MembershipReason::NoHigherRadical, std::nullopt, reduced, beta};

    const std::uint64_t base = normalize_modulus(m);
    const auto root = sqrt_in_cyclotomic(beta);
    const std::uint64_t big = lcm(base, root.modulus);
    const CycElem lifted = root.witness.embed(big);
    for (std::uint64_t c = 1; c < big; c += base) {
        if (std::gcd(c, big) != 1)
            continue;
        if (!(lifted.galois_apply(c) == lifted))
            return {MembershipAnswer::No, MembershipReason::GaloisInvariance, std::nullopt, reduced, beta};
    }
    auto down = lifted.restrict_to(base);
    if (!down)
        throw std::logic_error("nth_root_in_cyclotomic: fixed element failed to descend");
    return checked_yes(down->embed(m), MembershipReason::GaloisInvariance);
}

} // namespace trigrat
