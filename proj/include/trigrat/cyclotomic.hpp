#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in the cyclotomic field Q(zeta_m).
 *
 * Elements are stored in the power basis 1, zeta, ..., zeta^(phi(m)-1) and
 * kept reduced modulo the m-th cyclotomic polynomial. Because Phi_m is
 * irreducible over Q the representation is canonical: two elements of the
 * same modulus are equal iff their coordinate vectors are equal.
 *
 * Elements of different moduli never compare or combine directly; callers
 * embed both into a common modulus first (see embed()).
 *
 * Per-modulus data (Phi_m and the reduced powers zeta^e, 0 <= e < m) is
 * built once and memoized in a process-wide table guarded by a shared
 * mutex, so elements can be used from several threads at once.
 */

#include "trigrat/number_theory.hpp"
#include "trigrat/rat_poly.hpp"
#include "trigrat/rational.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trigrat {

namespace detail {

inline RatPoly cyclotomic_by_moebius(std::uint64_t m)
{
    RatPoly num{Rational(1)};
    RatPoly den{Rational(1)};
    for (std::uint64_t d : divisors(m)) {
        int mu = mobius(d);
        if (mu == 0)
            continue;
        RatPoly factor = RatPoly::binomial(m / d, Rational(1));
        if (mu == 1)
            num = num * factor;
        else
            den = den * factor;
    }
    return num.exact_div(den);
}

// Coordinates of zeta^e are small integers and mostly sparse; rows store
// only the nonzero (index, value) pairs.
using PowerRow = std::vector<std::pair<std::uint32_t, long>>;

struct FieldData {
    std::uint64_t modulus;
    std::size_t degree;
    RatPoly phi;
    // powers[e] = nonzero coordinates of zeta^e, 0 <= e < modulus
    std::vector<PowerRow> powers;
};

inline std::unique_ptr<const FieldData> build_field_data(std::uint64_t m)
{
    auto data = std::make_unique<FieldData>();
    data->modulus = m;
    data->phi = cyclotomic_by_moebius(m);
    const std::size_t deg = static_cast<std::size_t>(data->phi.degree());
    data->degree = deg;

    auto overflow = [m] {
        throw std::overflow_error("cyclotomic: coordinates of zeta_" + std::to_string(m) + " powers exceed a machine word");
    };
    std::vector<long> phi_int(deg + 1);
    for (std::size_t i = 0; i <= deg; ++i) {
        const Integer& c = data->phi.coeff(i).numerator();
        if (!c.fits_slong_p())
            overflow();
        phi_int[i] = c.get_si();
    }

    data->powers.reserve(m);
    std::vector<long> cur(deg);
    cur[0] = 1;
    for (std::uint64_t e = 0; e < m; ++e) {
        PowerRow row;
        for (std::size_t i = 0; i < deg; ++i)
            if (cur[i] != 0)
                row.emplace_back(static_cast<std::uint32_t>(i), cur[i]);
        data->powers.push_back(std::move(row));
        // multiply by zeta: shift up, fold x^deg back using monic Phi_m
        long top = cur[deg - 1];
        for (std::size_t i = deg - 1; i > 0; --i)
            cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (std::size_t i = 0; i < deg; ++i) {
                long prod;
                if (__builtin_mul_overflow(top, phi_int[i], &prod) || __builtin_sub_overflow(cur[i], prod, &cur[i]))
                    overflow();
            }
    }
    return data;
}

inline const FieldData& field_data(std::uint64_t m)
{
    if (m == 0)
        throw std::invalid_argument("cyclotomic modulus must be >= 1");
    static std::shared_mutex mutex;
    static std::map<std::uint64_t, std::unique_ptr<const FieldData>> cache;
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(m); it != cache.end())
            return *it->second;
    }
    auto built = build_field_data(m);
    std::unique_lock lock(mutex);
    auto [it, inserted] = cache.try_emplace(m, std::move(built));
    return *it->second;
}

inline std::uint64_t reduce_exponent(long long k, std::uint64_t m)
{
    long long r = k % static_cast<long long>(m);
    if (r < 0)
        r += static_cast<long long>(m);
    return static_cast<std::uint64_t>(r);
}

} // namespace detail

/// Phi_m: monic, integer coefficients, degree phi(m).
inline const RatPoly& cyclotomic_polynomial(std::uint64_t m) { return detail::field_data(m).phi; }

class CycElem {
public:
    /// Zero of Q(zeta_m).
    explicit CycElem(std::uint64_t m) : field_(&detail::field_data(m)), coeffs_(field_->degree) {}

    /// The rational r viewed inside Q(zeta_m).
    CycElem(std::uint64_t m, const Rational& r) : CycElem(m) { coeffs_[0] = r; }

    CycElem(std::uint64_t m, std::vector<Rational> coeffs) : field_(&detail::field_data(m)), coeffs_(std::move(coeffs))
    {
        if (coeffs_.size() != field_->degree)
            throw std::invalid_argument("CycElem: expected " + std::to_string(field_->degree) + " coordinates for modulus "
                                        + std::to_string(m) + ", got " + std::to_string(coeffs_.size()));
    }

    std::uint64_t modulus() const { return field_->modulus; }
    std::size_t degree() const { return field_->degree; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const
    {
        for (const auto& c : coeffs_)
            if (!c.is_zero())
                return false;
        return true;
    }

    /// Rational value, if every coordinate past the constant one vanishes.
    std::optional<Rational> as_rational() const
    {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero())
                return std::nullopt;
        return coeffs_[0];
    }

    CycElem operator-() const
    {
        CycElem out = *this;
        for (auto& c : out.coeffs_)
            c = -c;
        return out;
    }

    CycElem& operator+=(const CycElem& o)
    {
        check_same_field(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    CycElem& operator-=(const CycElem& o)
    {
        check_same_field(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    CycElem& operator*=(const Rational& s)
    {
        for (auto& c : coeffs_)
            c *= s;
        return *this;
    }

    friend CycElem operator+(CycElem a, const CycElem& b) { return a += b; }
    friend CycElem operator-(CycElem a, const CycElem& b) { return a -= b; }
    friend CycElem operator*(CycElem a, const Rational& s) { return a *= s; }
    friend CycElem operator*(const Rational& s, CycElem a) { return a *= s; }

    friend CycElem operator*(const CycElem& a, const CycElem& b)
    {
        a.check_same_field(b);
        const std::size_t deg = a.degree();
        const auto m = a.modulus();
        std::vector<Rational> full(2 * deg - 1);
        for (std::size_t i = 0; i < deg; ++i) {
            if (a.coeffs_[i].is_zero())
                continue;
            for (std::size_t j = 0; j < deg; ++j)
                if (!b.coeffs_[j].is_zero())
                    full[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        std::vector<Rational> out(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(deg));
        for (std::size_t k = deg; k < full.size(); ++k) {
            if (full[k].is_zero())
                continue;
            for (const auto& [i, v] : a.field_->powers[k % m])
                out[i] += full[k] * Rational(v);
        }
        return CycElem(a.field_, std::move(out));
    }
    CycElem& operator*=(const CycElem& o) { return *this = *this * o; }

    /// Equality is only defined within one modulus.
    friend bool operator==(const CycElem& a, const CycElem& b)
    {
        a.check_same_field(b);
        return a.coeffs_ == b.coeffs_;
    }

    /// Representative polynomial of degree < phi(m).
    RatPoly to_poly() const { return RatPoly(coeffs_); }

    /// Multiplicative inverse via extended Euclid against Phi_m.
    CycElem inverse() const
    {
        if (is_zero())
            throw std::domain_error("CycElem: division by zero");
        auto eg = extended_gcd(to_poly(), field_->phi);
        if (eg.gcd.degree() != 0)
            throw std::logic_error("CycElem::inverse: representative not coprime to Phi_m");
        return from_poly(modulus(), eg.s);
    }

    /// Reduces an arbitrary polynomial in zeta_m into canonical form.
    static CycElem from_poly(std::uint64_t m, const RatPoly& p)
    {
        const auto& fd = detail::field_data(m);
        std::vector<Rational> out(fd.degree);
        for (std::size_t k = 0; k < p.coeffs().size(); ++k)
            accumulate_power(fd, out, k % m, p.coeffs()[k]);
        return CycElem(&fd, std::move(out));
    }

    /// Image under tau_c: zeta_m -> zeta_m^c. Requires gcd(c, m) = 1.
    CycElem galois_apply(std::uint64_t c) const
    {
        const auto m = modulus();
        if (std::gcd(c % m, m) != 1)
            throw std::invalid_argument("galois_apply: c=" + std::to_string(c) + " is not coprime to modulus "
                                        + std::to_string(m));
        std::vector<Rational> out(degree());
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            if (!coeffs_[k].is_zero())
                accumulate_power(*field_, out, (c % m) * k % m, coeffs_[k]);
        return CycElem(field_, std::move(out));
    }

    /// Complex conjugation fixes the element.
    bool is_real() const
    {
        if (modulus() <= 2)
            return true;
        return galois_apply(modulus() - 1) == *this;
    }

    /// Same field element inside Q(zeta_M), via zeta_m = zeta_M^(M/m).
    CycElem embed(std::uint64_t target) const
    {
        const auto m = modulus();
        if (target == 0 || target % m != 0)
            throw std::invalid_argument("embed: " + std::to_string(target) + " is not a multiple of modulus "
                                        + std::to_string(m));
        const auto& fd = detail::field_data(target);
        const std::uint64_t scale = target / m;
        std::vector<Rational> out(fd.degree);
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            if (!coeffs_[k].is_zero())
                accumulate_power(fd, out, k * scale % target, coeffs_[k]);
        return CycElem(&fd, std::move(out));
    }

    /// Inverse of embed(): the element of Q(zeta_target) that embeds to *this,
    /// if the element lies in that subfield. target must divide modulus().
    std::optional<CycElem> restrict_to(std::uint64_t target) const;

    /// Floating-point value sum c_k exp(2 pi i k / m). Sanity checks only.
    std::complex<double> numeric() const
    {
        const double m = static_cast<double>(modulus());
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            if (!coeffs_[k].is_zero())
                acc += coeffs_[k].to_double() * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / m);
        return acc;
    }

    std::string to_string() const
    {
        std::string out;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            const Rational& c = coeffs_[k];
            if (c.is_zero())
                continue;
            std::string term;
            Rational mag = abs(c);
            if (!out.empty())
                out += c.sign() < 0 ? " - " : " + ";
            else if (c.sign() < 0)
                out += "-";
            if (k == 0)
                term = mag.to_string();
            else {
                if (mag != Rational(1))
                    term = mag.to_string() + "*";
                term += "z" + std::to_string(modulus());
                if (k > 1)
                    term += "^" + std::to_string(k);
            }
            out += term;
        }
        return out.empty() ? "0" : out;
    }

private:
    CycElem(const detail::FieldData* fd, std::vector<Rational> coeffs) : field_(fd), coeffs_(std::move(coeffs)) {}

    static void accumulate_power(const detail::FieldData& fd, std::vector<Rational>& out, std::uint64_t e,
                                 const Rational& c)
    {
        if (e < fd.degree) {
            out[e] += c;
            return;
        }
        for (const auto& [i, v] : fd.powers[e])
            out[i] += c * Rational(v);
    }

    void check_same_field(const CycElem& o) const
    {
        if (field_ != o.field_)
            throw std::invalid_argument("CycElem: modulus mismatch (" + std::to_string(modulus()) + " vs "
                                        + std::to_string(o.modulus()) + "); embed into a common modulus first");
    }

    const detail::FieldData* field_;
    std::vector<Rational> coeffs_;
};

/// zeta_m^k for any integer k.
inline CycElem zeta_power(std::uint64_t m, long long k)
{
    const auto& fd = detail::field_data(m);
    std::vector<Rational> coeffs(fd.degree);
    for (const auto& [i, v] : fd.powers[detail::reduce_exponent(k, m)])
        coeffs[i] = Rational(v);
    return CycElem(m, std::move(coeffs));
}

inline CycElem inverse(const CycElem& x) { return x.inverse(); }
inline CycElem galois_apply(std::uint64_t c, const CycElem& x) { return x.galois_apply(c); }
inline std::optional<Rational> as_rational(const CycElem& x) { return x.as_rational(); }
inline bool is_real(const CycElem& x) { return x.is_real(); }
inline CycElem embed(const CycElem& x, std::uint64_t target) { return x.embed(target); }
inline std::complex<double> numeric_eval(const CycElem& x) { return x.numeric(); }

inline CycElem pow(CycElem base, std::uint64_t e)
{
    CycElem acc(base.modulus(), Rational(1));
    while (e > 0) {
        if (e & 1U)
            acc = acc * base;
        e >>= 1U;
        if (e > 0)
            base = base * base;
    }
    return acc;
}

/// Units (Z/mZ)^x as representatives in [1, m]; {1} for m = 1.
inline std::vector<std::uint64_t> units_mod(std::uint64_t m)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t c = 1; c <= m; ++c)
        if (std::gcd(c, m) == 1)
            out.push_back(c % m == 0 ? 1 : c);
    return out;
}

inline std::optional<CycElem> CycElem::restrict_to(std::uint64_t target) const
{
    const auto big = modulus();
    if (target == 0 || big % target != 0)
        throw std::invalid_argument("restrict_to: " + std::to_string(target) + " does not divide modulus "
                                    + std::to_string(big));
    const std::size_t rows = degree();
    const std::size_t cols = euler_phi(target);

    // Solve A y = x where column j of A is the embedding of zeta_target^j.
    std::vector<std::vector<Rational>> aug(rows, std::vector<Rational>(cols + 1));
    for (std::size_t j = 0; j < cols; ++j) {
        auto col = zeta_power(target, static_cast<long long>(j)).embed(big);
        for (std::size_t i = 0; i < rows; ++i)
            aug[i][j] = col.coeffs()[i];
    }
    for (std::size_t i = 0; i < rows; ++i)
        aug[i][cols] = coeffs_[i];

    std::vector<std::size_t> pivot_row(cols);
    std::size_t r = 0;
    for (std::size_t j = 0; j < cols; ++j) {
        std::size_t p = r;
        while (p < rows && aug[p][j].is_zero())
            ++p;
        if (p == rows)
            throw std::logic_error("restrict_to: embedding is not injective");
        std::swap(aug[p], aug[r]);
        Rational inv = Rational(1) / aug[r][j];
        for (auto& v : aug[r])
            v *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || aug[i][j].is_zero())
                continue;
            Rational f = aug[i][j];
            for (std::size_t k = j; k <= cols; ++k)
                aug[i][k] -= f * aug[r][k];
        }
        pivot_row[j] = r++;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!aug[i][cols].is_zero())
            return std::nullopt;
    std::vector<Rational> y(cols);
    for (std::size_t j = 0; j < cols; ++j)
        y[j] = aug[pivot_row[j]][cols];
    return CycElem(target, std::move(y));
}

} // namespace trigrat
