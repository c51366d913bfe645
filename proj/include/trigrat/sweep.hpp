#pragma once

/**
 * @file sweep.hpp
 * @brief Exhaustive exact check of which powers of trig values are rational.
 *
 * For every reduced theta = p/q with q <= q_max and 0 <= p < 2q, every
 * requested function f and every 1 <= n <= n_max, f(pi*theta)^n is computed
 * exactly. Each rational hit is checked against the closed value list for
 * the parity of n and against classify(); any disagreement is a violation.
 */

#include "trigrat/trig_values.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

namespace trigrat {

struct SweepConfig {
    std::uint64_t q_max = 24;
    std::uint64_t n_max = 8;
    std::vector<TrigFunc> funcs{kAllTrigFuncs.begin(), kAllTrigFuncs.end()};
    unsigned threads = 1; // > 1 runs queries in parallel

    void validate() const
    {
        if (q_max < 1)
            throw std::invalid_argument("sweep: q_max must be >= 1");
        if (n_max < 1)
            throw std::invalid_argument("sweep: n_max must be >= 1");
        if (funcs.empty())
            throw std::invalid_argument("sweep: at least one function required");
        if (threads < 1)
            throw std::invalid_argument("sweep: threads must be >= 1");
    }
};

struct SweepHit {
    TrigFunc func;
    Angle angle;
    std::uint64_t n;
    Rational value;                        // f(pi*theta)^n
    std::optional<ExactValue> underlying;  // f(pi*theta) itself
};

struct SweepViolation {
    TrigFunc func;
    Angle angle;
    std::uint64_t n; // 0 when the violation concerns the query as a whole
    std::string reason;
};

struct SweepTotals {
    std::uint64_t queries = 0;        // (func, theta) pairs
    std::uint64_t power_queries = 0;  // (func, theta, n) triples evaluated
    std::uint64_t value_rational = 0;
    std::uint64_t square_rational = 0;
    std::uint64_t never = 0;
    std::uint64_t undefined = 0;

    SweepTotals& operator+=(const SweepTotals& o)
    {
        queries += o.queries;
        power_queries += o.power_queries;
        value_rational += o.value_rational;
        square_rational += o.square_rational;
        never += o.never;
        undefined += o.undefined;
        return *this;
    }
    friend bool operator==(const SweepTotals&, const SweepTotals&) = default;
};

struct SweepReport {
    std::vector<SweepHit> hits;
    std::vector<SweepViolation> violations;
    SweepTotals totals;

    bool confirmed() const { return violations.empty(); }
};

/// All reduced angles p/q, q <= q_max, 0 <= p < 2q, ordered by (q, p).
inline std::vector<Angle> reduced_angles(std::uint64_t q_max)
{
    std::vector<Angle> out;
    for (std::uint64_t q = 1; q <= q_max; ++q)
        for (std::uint64_t p = 0; p < 2 * q; ++p)
            if (std::gcd(p, q) == 1)
                out.emplace_back(static_cast<long long>(p), static_cast<long long>(q));
    return out;
}

namespace detail {

inline bool contains(const std::vector<ExactValue>& list, const ExactValue& v)
{
    return std::find(list.begin(), list.end(), v) != list.end();
}

inline void sweep_one(TrigFunc f, const Angle& angle, std::uint64_t n_max, SweepReport& out)
{
    out.totals.queries += 1;
    const Classification cls = classify(f, angle);
    switch (cls.verdict) {
    case TrigCase::ValueRational: ++out.totals.value_rational; break;
    case TrigCase::SquareRational: ++out.totals.square_rational; break;
    case TrigCase::Never: ++out.totals.never; break;
    case TrigCase::Undefined: ++out.totals.undefined; return;
    }

    auto violate = [&](std::uint64_t n, std::string why) { out.violations.push_back({f, angle, n, std::move(why)}); };

    const CycElem value = trig_elem(f, angle);
    const std::optional<ExactValue> underlying = exact_value(f, angle);
    CycElem power(value.modulus(), Rational(1));
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        power = power * value;
        out.totals.power_queries += 1;
        const auto r = power.as_rational();
        const bool expect_hit = cls.verdict == TrigCase::ValueRational
                                || (cls.verdict == TrigCase::SquareRational && n % 2 == 0);
        if (!r) {
            if (expect_hit)
                violate(n, "classification " + std::string(to_string(cls.verdict)) + " predicts a rational power");
            continue;
        }
        out.hits.push_back({f, angle, n, *r, underlying});
        if (!expect_hit)
            violate(n, "rational power contradicts classification " + std::string(to_string(cls.verdict)));
        if (!underlying) {
            violate(n, "rational power although neither value nor square is rational");
            continue;
        }
        const bool value_rational = underlying->as_rational().has_value();
        if (n % 2 == 1 && !value_rational)
            violate(n, "rational odd power of an irrational value");
        if (!contains(theorem_value_list(f, parity_of(n)), *underlying))
            violate(n, "value " + underlying->to_string() + " outside the admissible list");
        if (!value_rational && n % 2 == 1)
            continue;
        // re-verify value^n from the signed square-root form
        Rational recomputed = value_rational ? pow(*underlying->as_rational(), n)
                                             : pow(underlying->square, n / 2);
        if (recomputed != *r)
            violate(n, "recomputed power " + recomputed.to_string() + " differs from " + r->to_string());
    }
}

inline std::size_t func_rank(TrigFunc f) { return static_cast<std::size_t>(f); }

} // namespace detail

inline SweepReport verify_theorem_sweep(const SweepConfig& cfg)
{
    cfg.validate();
    std::vector<std::pair<TrigFunc, Angle>> queries;
    for (const auto& angle : reduced_angles(cfg.q_max))
        for (TrigFunc f : cfg.funcs)
            queries.emplace_back(f, angle);

    const unsigned workers = std::min<unsigned>(cfg.threads, static_cast<unsigned>(std::max<std::size_t>(queries.size(), 1)));
    std::vector<SweepReport> partial(workers);
    auto run = [&](unsigned w) {
        for (std::size_t i = w; i < queries.size(); i += workers)
            detail::sweep_one(queries[i].first, queries[i].second, cfg.n_max, partial[w]);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(run, w);
        for (auto& t : pool)
            t.join();
    }

    SweepReport report;
    for (auto& part : partial) {
        report.totals += part.totals;
        std::move(part.hits.begin(), part.hits.end(), std::back_inserter(report.hits));
        std::move(part.violations.begin(), part.violations.end(), std::back_inserter(report.violations));
    }
    auto key = [](TrigFunc f, const Angle& a, std::uint64_t n) {
        return std::make_tuple(detail::func_rank(f), a.q(), a.p(), n);
    };
    std::sort(report.hits.begin(), report.hits.end(),
              [&](const SweepHit& x, const SweepHit& y) { return key(x.func, x.angle, x.n) < key(y.func, y.angle, y.n); });
    std::stable_sort(report.violations.begin(), report.violations.end(), [&](const SweepViolation& x, const SweepViolation& y) {
        return key(x.func, x.angle, x.n) < key(y.func, y.angle, y.n);
    });
    return report;
}

} // namespace trigrat
