#pragma once

// The metacyclic group Z/nZ x| (Z/nZ)^x of pairs (a, c), acting on formal
// symbols by  alpha^(1/n) -> zeta^a alpha^(1/n),  zeta -> zeta^c.
// sigma = (1, 1) and tau_c = (0, c) satisfy tau_c sigma = sigma^c tau_c.

#include "trigrat/number_theory.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace trigrat {

class MetaGaloisElem {
public:
    MetaGaloisElem(std::uint64_t n, std::uint64_t a, std::uint64_t c) : n_(n), a_(a % n), c_(c % n)
    {
        if (n < 2)
            throw std::invalid_argument("MetaGaloisElem: n must be >= 2");
        if (std::gcd(c_, n_) != 1)
            throw std::invalid_argument("MetaGaloisElem: c=" + std::to_string(c) + " not a unit mod " + std::to_string(n));
    }

    static MetaGaloisElem identity(std::uint64_t n) { return {n, 0, 1}; }
    static MetaGaloisElem sigma(std::uint64_t n) { return {n, 1, 1}; }
    static MetaGaloisElem tau(std::uint64_t n, std::uint64_t c) { return {n, 0, c}; }

    std::uint64_t n() const { return n_; }
    std::uint64_t a() const { return a_; }
    std::uint64_t c() const { return c_; }

    friend bool operator==(const MetaGaloisElem&, const MetaGaloisElem&) = default;

    std::string to_string() const { return "(" + std::to_string(a_) + "," + std::to_string(c_) + ")"; }

private:
    std::uint64_t n_, a_, c_;
};

/// (a1, c1) o (a2, c2) = (a1 + c1 a2, c1 c2)   (apply the right factor first)
inline MetaGaloisElem meta_compose(const MetaGaloisElem& g, const MetaGaloisElem& h)
{
    if (g.n() != h.n())
        throw std::invalid_argument("meta_compose: mismatched n");
    const auto n = g.n();
    return {n, (g.a() + g.c() * h.a()) % n, g.c() * h.c() % n};
}

inline MetaGaloisElem meta_power(const MetaGaloisElem& g, std::uint64_t k)
{
    auto acc = MetaGaloisElem::identity(g.n());
    for (std::uint64_t i = 0; i < k; ++i)
        acc = meta_compose(acc, g);
    return acc;
}

inline MetaGaloisElem meta_inverse(const MetaGaloisElem& g)
{
    const auto n = g.n();
    std::uint64_t c_inv = 1;
    while (c_inv * g.c() % n != 1 % n)
        ++c_inv;
    return {n, (n - c_inv * g.a() % n) % n, c_inv};
}

/// All n * phi(n) elements, ordered by (c, a).
inline std::vector<MetaGaloisElem> meta_elements(std::uint64_t n)
{
    std::vector<MetaGaloisElem> out;
    for (std::uint64_t c = 1; c < n; ++c) {
        if (std::gcd(c, n) != 1)
            continue;
        for (std::uint64_t a = 0; a < n; ++a)
            out.emplace_back(n, a, c);
    }
    return out;
}

struct MetaGroupReport {
    std::uint64_t n = 0;
    std::uint64_t order = 0;
    bool axioms_hold = false;
    bool abelian = false;
    bool relation_holds = false;
    bool translations_normal = false;
};

/// Exhaustive check of closure, associativity, identity, inverses,
/// commutativity, the twisting relation and normality of {(a, 1)}.
inline MetaGroupReport meta_group_checks(std::uint64_t n)
{
    if (n < 2)
        throw std::invalid_argument("meta_group_checks: n must be >= 2");
    const auto elems = meta_elements(n);
    MetaGroupReport rep;
    rep.n = n;
    rep.order = elems.size();

    auto index_of = [&](const MetaGaloisElem& g) -> long {
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (elems[i] == g)
                return static_cast<long>(i);
        return -1;
    };

    const auto e = MetaGaloisElem::identity(n);
    bool ok = index_of(e) >= 0;
    bool abelian = true;
    for (const auto& g : elems) {
        ok = ok && meta_compose(e, g) == g && meta_compose(g, e) == g;
        ok = ok && meta_compose(g, meta_inverse(g)) == e && meta_compose(meta_inverse(g), g) == e;
        for (const auto& h : elems) {
            auto gh = meta_compose(g, h);
            ok = ok && index_of(gh) >= 0;
            if (abelian && !(gh == meta_compose(h, g)))
                abelian = false;
            for (const auto& k : elems)
                if (!(meta_compose(gh, k) == meta_compose(g, meta_compose(h, k)))) {
                    ok = false;
                    break;
                }
        }
    }
    rep.axioms_hold = ok;
    rep.abelian = abelian;

    const auto sigma = MetaGaloisElem::sigma(n);
    bool relation = true;
    for (std::uint64_t c = 1; c < n; ++c) {
        if (std::gcd(c, n) != 1)
            continue;
        const auto tau = MetaGaloisElem::tau(n, c);
        relation = relation && meta_compose(tau, sigma) == meta_compose(meta_power(sigma, c), tau);
    }
    rep.relation_holds = relation;

    bool normal = true;
    for (const auto& g : elems)
        for (std::uint64_t a = 0; a < n; ++a) {
            auto conj = meta_compose(meta_compose(g, MetaGaloisElem(n, a, 1)), meta_inverse(g));
            normal = normal && conj.c() == 1;
        }
    rep.translations_normal = normal;
    return rep;
}

} // namespace trigrat
