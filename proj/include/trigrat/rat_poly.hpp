#pragma once

// Dense univariate polynomials over Q, constant term first.

#include "trigrat/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trigrat {

class RatPoly {
public:
    RatPoly() = default;
    RatPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
    explicit RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    /// c * x^k
    static RatPoly monomial(const Rational& c, std::size_t k)
    {
        std::vector<Rational> v(k + 1);
        v[k] = c;
        return RatPoly(std::move(v));
    }

    /// x^n - a
    static RatPoly binomial(std::size_t n, const Rational& a)
    {
        std::vector<Rational> v(n + 1);
        v[n] = 1;
        v[0] -= a;
        return RatPoly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(); }
    Rational leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == Rational(1); }

    bool has_integer_coeffs() const
    {
        for (const auto& c : coeffs_)
            if (!c.is_integer())
                return false;
        return true;
    }

    Rational evaluate(const Rational& x) const
    {
        Rational acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    RatPoly monic() const
    {
        if (is_zero())
            throw std::domain_error("monic of zero polynomial");
        RatPoly out = *this;
        Rational lc = leading();
        for (auto& c : out.coeffs_)
            c /= lc;
        return out;
    }

    RatPoly operator-() const
    {
        RatPoly out = *this;
        for (auto& c : out.coeffs_)
            c = -c;
        return out;
    }

    RatPoly& operator+=(const RatPoly& o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    RatPoly& operator-=(const RatPoly& o) { return *this += -o; }

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }

    friend RatPoly operator*(const RatPoly& a, const RatPoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero())
                continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return RatPoly(std::move(v));
    }

    friend RatPoly operator*(const Rational& s, const RatPoly& p)
    {
        RatPoly out = p;
        for (auto& c : out.coeffs_)
            c *= s;
        out.trim();
        return out;
    }

    friend bool operator==(const RatPoly&, const RatPoly&) = default;

    /// Euclidean division: *this = q * divisor + r with deg r < deg divisor.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& divisor) const
    {
        if (divisor.is_zero())
            throw std::domain_error("polynomial division by zero");
        if (degree() < divisor.degree())
            return {RatPoly{}, *this};
        std::vector<Rational> rem = coeffs_;
        const std::size_t dd = divisor.coeffs_.size() - 1;
        std::vector<Rational> quo(rem.size() - dd);
        const Rational lc = divisor.leading();
        for (std::size_t k = quo.size(); k-- > 0;) {
            Rational t = rem[k + dd] / lc;
            quo[k] = t;
            if (t.is_zero())
                continue;
            for (std::size_t j = 0; j <= dd; ++j)
                rem[k + j] -= t * divisor.coeffs_[j];
        }
        rem.resize(dd);
        return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
    }

    friend RatPoly operator%(const RatPoly& a, const RatPoly& b) { return a.divmod(b).second; }

    /// Exact quotient; throws if the division leaves a remainder.
    RatPoly exact_div(const RatPoly& divisor) const
    {
        auto [q, r] = divmod(divisor);
        if (!r.is_zero())
            throw std::domain_error("polynomial division is not exact");
        return q;
    }

    /// Textual form, e.g. "x^2 - 1/2*x - 1/4".
    std::string to_string(const std::string& var = "x") const
    {
        if (is_zero())
            return "0";
        std::string out;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            const Rational& c = coeffs_[k];
            if (c.is_zero())
                continue;
            Rational mag = abs(c);
            if (out.empty())
                out += c.sign() < 0 ? "-" : "";
            else
                out += c.sign() < 0 ? " - " : " + ";
            bool unit = mag == Rational(1);
            if (k == 0) {
                out += mag.to_string();
                continue;
            }
            if (!unit)
                out += mag.to_string() + "*";
            out += var;
            if (k > 1)
                out += "^" + std::to_string(k);
        }
        return out;
    }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back().is_zero())
            coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

struct ExtendedGcd {
    RatPoly gcd;    // monic (or zero)
    RatPoly s, t;   // s*a + t*b == gcd
};

inline ExtendedGcd extended_gcd(const RatPoly& a, const RatPoly& b)
{
    RatPoly r0 = a, r1 = b;
    RatPoly s0{Rational(1)}, s1;
    RatPoly t0, t1{Rational(1)};
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero())
        return {r0, s0, t0};
    Rational lc_inv = Rational(1) / r0.leading();
    return {lc_inv * r0, lc_inv * s0, lc_inv * t0};
}

} // namespace trigrat
