#pragma once

// Polynomials with coefficients in Q(zeta_m), and minimal polynomials of
// cyclotomic elements as products over their Galois orbits.

#include "trigrat/cyclotomic.hpp"
#include "trigrat/rat_poly.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trigrat {

class CycPoly {
public:
    explicit CycPoly(std::uint64_t m) : modulus_(m) {}
    CycPoly(std::uint64_t m, std::vector<CycElem> coeffs) : modulus_(m), coeffs_(std::move(coeffs))
    {
        for (const auto& c : coeffs_)
            if (c.modulus() != m)
                throw std::invalid_argument("CycPoly: coefficient modulus mismatch");
        trim();
    }

    /// A rational polynomial with coefficients lifted into Q(zeta_m).
    static CycPoly lift(std::uint64_t m, const RatPoly& p)
    {
        std::vector<CycElem> v;
        v.reserve(p.coeffs().size());
        for (const auto& c : p.coeffs())
            v.emplace_back(m, c);
        return CycPoly(m, std::move(v));
    }

    std::uint64_t modulus() const { return modulus_; }
    const std::vector<CycElem>& coeffs() const { return coeffs_; }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    CycElem evaluate(const CycElem& x) const
    {
        CycElem acc(modulus_);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    /// The same polynomial over Q, if every coefficient is rational.
    std::optional<RatPoly> to_rational() const
    {
        std::vector<Rational> v;
        v.reserve(coeffs_.size());
        for (const auto& c : coeffs_) {
            auto r = c.as_rational();
            if (!r)
                return std::nullopt;
            v.push_back(*r);
        }
        return RatPoly(std::move(v));
    }

    friend CycPoly operator+(const CycPoly& a, const CycPoly& b)
    {
        a.check(b);
        std::vector<CycElem> v;
        const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
        v.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            CycElem c(a.modulus_);
            if (i < a.coeffs_.size())
                c += a.coeffs_[i];
            if (i < b.coeffs_.size())
                c += b.coeffs_[i];
            v.push_back(std::move(c));
        }
        return CycPoly(a.modulus_, std::move(v));
    }

    friend CycPoly operator*(const CycPoly& a, const CycPoly& b)
    {
        a.check(b);
        if (a.is_zero() || b.is_zero())
            return CycPoly(a.modulus_);
        std::vector<CycElem> v(a.coeffs_.size() + b.coeffs_.size() - 1, CycElem(a.modulus_));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return CycPoly(a.modulus_, std::move(v));
    }

    friend bool operator==(const CycPoly& a, const CycPoly& b)
    {
        a.check(b);
        return a.coeffs_ == b.coeffs_;
    }

    std::string to_string(const std::string& var = "x") const
    {
        if (auto rational = to_rational())
            return rational->to_string(var);
        std::string out;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            if (coeffs_[k].is_zero())
                continue;
            if (!out.empty())
                out += " + ";
            std::string c = coeffs_[k].to_string();
            if (k == 0)
                out += "(" + c + ")";
            else {
                if (c != "1")
                    out += "(" + c + ")*";
                out += var;
                if (k > 1)
                    out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back().is_zero())
            coeffs_.pop_back();
    }
    void check(const CycPoly& o) const
    {
        if (modulus_ != o.modulus_)
            throw std::invalid_argument("CycPoly: modulus mismatch");
    }

    std::uint64_t modulus_;
    std::vector<CycElem> coeffs_;
};

/// Distinct Galois conjugates of x, in order of the first unit producing each.
inline std::vector<CycElem> galois_orbit(const CycElem& x)
{
    std::vector<CycElem> orbit;
    for (std::uint64_t c : units_mod(x.modulus())) {
        CycElem y = x.galois_apply(c);
        bool seen = false;
        for (const auto& z : orbit)
            if (z == y) {
                seen = true;
                break;
            }
        if (!seen)
            orbit.push_back(std::move(y));
    }
    return orbit;
}

/// Monic minimal polynomial of x over Q: the product of (t - y) over the
/// distinct conjugates y of x.
inline RatPoly minimal_polynomial(const CycElem& x)
{
    const auto m = x.modulus();
    CycPoly acc = CycPoly::lift(m, RatPoly{Rational(1)});
    for (const auto& y : galois_orbit(x))
        acc = acc * CycPoly(m, {-y, CycElem(m, Rational(1))});
    auto rational = acc.to_rational();
    if (!rational)
        throw std::logic_error("minimal_polynomial: orbit product has non-rational coefficients");
    return *rational;
}

} // namespace trigrat
