#pragma once

/**
 * @file trig_values.hpp
 * @brief cos, sin and tan of rational multiples of pi as exact cyclotomic
 *        elements, and the decision of which powers of them are rational.
 *
 * For theta = p/q the working field is Q(zeta_M) with M = lcm(2q, 4):
 * e^{i pi p/q} = zeta_{2q}^p and i = zeta_4 both live there.
 *
 * A value whose n-th power is rational for some n >= 1 is either rational
 * itself or has a rational square; powers rational at n >= 3 without a
 * rational square cannot occur. classify() therefore decides with exact
 * tests at n = 1 and n = 2 only.
 */

#include "trigrat/cyclotomic.hpp"
#include "trigrat/number_theory.hpp"
#include "trigrat/rational.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trigrat {

enum class TrigFunc { Cos, Sin, Tan };

inline constexpr std::array<TrigFunc, 3> kAllTrigFuncs{TrigFunc::Cos, TrigFunc::Sin, TrigFunc::Tan};

inline std::string_view to_string(TrigFunc f)
{
    switch (f) {
    case TrigFunc::Cos: return "cos";
    case TrigFunc::Sin: return "sin";
    case TrigFunc::Tan: return "tan";
    }
    return "?";
}

inline TrigFunc parse_trig_func(std::string_view s)
{
    if (s == "cos" || s == "COS")
        return TrigFunc::Cos;
    if (s == "sin" || s == "SIN")
        return TrigFunc::Sin;
    if (s == "tan" || s == "TAN")
        return TrigFunc::Tan;
    throw std::invalid_argument("unknown trigonometric function '" + std::string(s) + "'");
}

/// theta = p/q in lowest terms, normalized into [0, 2).
class Angle {
public:
    Angle(long long p, long long q)
    {
        if (q == 0)
            throw std::invalid_argument("angle denominator must be nonzero");
        if (q < 0) {
            p = -p;
            q = -q;
        }
        long long g = std::gcd(p < 0 ? -p : p, q);
        if (g == 0)
            g = 1;
        p /= g;
        q /= g;
        long long period = 2 * q;
        p %= period;
        if (p < 0)
            p += period;
        p_ = p;
        q_ = static_cast<std::uint64_t>(q);
    }

    /// Parses "p/q" or an integer "p".
    static Angle parse(std::string_view text)
    {
        Rational r = Rational::parse(text);
        if (!r.numerator().fits_slong_p() || !r.denominator().fits_slong_p())
            throw std::invalid_argument("angle out of range: '" + std::string(text) + "'");
        return Angle(r.numerator().get_si(), r.denominator().get_si());
    }

    long long p() const { return p_; }
    std::uint64_t q() const { return q_; }

    /// The working modulus lcm(2q, 4).
    std::uint64_t modulus() const { return lcm(2 * q_, 4); }

    std::string to_string() const { return std::to_string(p_) + "/" + std::to_string(q_); }

    friend bool operator==(const Angle&, const Angle&) = default;

private:
    long long p_ = 0;
    std::uint64_t q_ = 1;
};

class UndefinedValue : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// tan has a pole where cos vanishes, i.e. theta in {1/2, 3/2}.
inline bool is_pole(TrigFunc f, const Angle& a) { return f == TrigFunc::Tan && a.q() == 2; }

/// The exact value of f(pi * theta) inside Q(zeta_M), M = lcm(2q, 4).
inline CycElem trig_elem(TrigFunc f, const Angle& a)
{
    const std::uint64_t m = a.modulus();
    const long long e = a.p() * static_cast<long long>(m / (2 * a.q()));
    const CycElem z = zeta_power(m, e);
    const CycElem zinv = zeta_power(m, -e);
    const Rational half(1, 2);
    CycElem cosv = (z + zinv) * half;
    if (f == TrigFunc::Cos)
        return cosv;
    CycElem two_i = zeta_power(m, static_cast<long long>(m / 4)) * Rational(2);
    CycElem sinv = (z - zinv) * two_i.inverse();
    if (f == TrigFunc::Sin)
        return sinv;
    if (cosv.is_zero())
        throw UndefinedValue("tan(pi*" + a.to_string() + ") is undefined");
    return sinv * cosv.inverse();
}

/// f(pi*theta)^n if it is rational.
inline std::optional<Rational> power_rational(TrigFunc f, const Angle& a, std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("power_rational: n must be >= 1");
    return pow(trig_elem(f, a), n).as_rational();
}

/// Exact sign of f(pi*theta) from the quadrant of theta.
inline int trig_sign(TrigFunc f, const Angle& a)
{
    const long long p2 = 2 * a.p();
    const long long q = static_cast<long long>(a.q());
    auto cos_sign = [&] {
        if (p2 == q || p2 == 3 * q)
            return 0;
        return (p2 < q || p2 > 3 * q) ? 1 : -1;
    };
    auto sin_sign = [&] {
        if (a.p() == 0 || a.p() == q)
            return 0;
        return a.p() < q ? 1 : -1;
    };
    switch (f) {
    case TrigFunc::Cos: return cos_sign();
    case TrigFunc::Sin: return sin_sign();
    case TrigFunc::Tan:
        if (cos_sign() == 0)
            throw UndefinedValue("tan(pi*" + a.to_string() + ") is undefined");
        return sin_sign() * cos_sign();
    }
    return 0;
}

/// sign * sqrt(square). Rational exactly when square is a rational square.
struct ExactValue {
    int sign = 0;
    Rational square;

    static ExactValue from_rational(const Rational& r) { return {r.sign(), r * r}; }

    std::optional<Rational> as_rational() const
    {
        if (sign == 0)
            return Rational();
        auto root = nth_root_rational(square, 2);
        if (!root)
            return std::nullopt;
        return sign < 0 ? -*root : *root;
    }

    std::string to_string() const
    {
        if (auto r = as_rational())
            return r->to_string();
        return std::string(sign < 0 ? "-" : "") + "sqrt(" + square.to_string() + ")";
    }

    friend bool operator==(const ExactValue&, const ExactValue&) = default;
    friend bool operator<(const ExactValue& a, const ExactValue& b)
    {
        // numeric order: sign * sqrt(square)
        if (a.sign != b.sign)
            return a.sign < b.sign;
        return a.sign >= 0 ? a.square < b.square : b.square < a.square;
    }
};

/// f(pi*theta) as a signed square root, if it or its square is rational.
inline std::optional<ExactValue> exact_value(TrigFunc f, const Angle& a)
{
    CycElem v = trig_elem(f, a);
    if (auto r = v.as_rational())
        return ExactValue::from_rational(*r);
    if (auto sq = (v * v).as_rational())
        return ExactValue{trig_sign(f, a), *sq};
    return std::nullopt;
}

enum class Parity { Odd, Even };

inline Parity parity_of(std::uint64_t n) { return n % 2 == 0 ? Parity::Even : Parity::Odd; }

/// The closed list of values f(pi*theta) can take when f(pi*theta)^n is
/// rational, for n of the given parity. Sorted ascending.
inline std::vector<ExactValue> theorem_value_list(TrigFunc f, Parity parity)
{
    std::vector<Rational> squares;
    if (f == TrigFunc::Tan) {
        squares = {Rational(0), Rational(1)};
        if (parity == Parity::Even) {
            squares.emplace_back(1, 3);
            squares.emplace_back(3);
        }
    } else {
        squares = {Rational(0), Rational(1, 4), Rational(1)};
        if (parity == Parity::Even) {
            squares.emplace_back(1, 2);
            squares.emplace_back(3, 4);
        }
    }
    std::vector<ExactValue> out;
    for (const auto& s : squares) {
        if (s.is_zero()) {
            out.push_back({0, s});
            continue;
        }
        out.push_back({1, s});
        out.push_back({-1, s});
    }
    std::sort(out.begin(), out.end());
    return out;
}

enum class TrigCase { ValueRational, SquareRational, Never, Undefined };

inline std::string_view to_string(TrigCase c)
{
    switch (c) {
    case TrigCase::ValueRational: return "VALUE_RATIONAL";
    case TrigCase::SquareRational: return "SQUARE_RATIONAL";
    case TrigCase::Never: return "NEVER";
    case TrigCase::Undefined: return "UNDEFINED";
    }
    return "?";
}

struct Classification {
    TrigFunc func;
    Angle angle;
    TrigCase verdict;
    std::optional<std::uint64_t> minimal_n;
    std::optional<Rational> value_at_minimal_n;
    std::optional<CycElem> witness; // absent only when undefined
};

/// Which powers of f(pi*theta) are rational: all of them (VALUE_RATIONAL),
/// exactly the even ones (SQUARE_RATIONAL), or none (NEVER).
inline Classification classify(TrigFunc f, const Angle& a)
{
    if (is_pole(f, a))
        return {f, a, TrigCase::Undefined, std::nullopt, std::nullopt, std::nullopt};
    CycElem v = trig_elem(f, a);
    if (auto r = v.as_rational())
        return {f, a, TrigCase::ValueRational, 1, *r, v};
    if (auto sq = (v * v).as_rational())
        return {f, a, TrigCase::SquareRational, 2, *sq, v};
    return {f, a, TrigCase::Never, std::nullopt, std::nullopt, v};
}

} // namespace trigrat
