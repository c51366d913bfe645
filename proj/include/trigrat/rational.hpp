#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers over arbitrary-precision integers.
 *
 * A thin value type over GMP's mpq_class. Every constructor canonicalizes,
 * so a Rational is always stored in lowest terms with a positive
 * denominator and zero is uniquely 0/1.
 *
 * Textual form is "a/b" or "a" with an optional leading '-'.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace trigrat {

using Integer = mpz_class;

class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}                    // NOLINT(implicit)
    Rational(int n) : value_(n) {}                     // NOLINT(implicit)
    Rational(const Integer& n) : value_(n) {}          // NOLINT(implicit)
    Rational(const Integer& num, const Integer& den)
    {
        if (den == 0)
            throw std::domain_error("rational with zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    explicit Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

    /// Parses "a/b" or "a" (optional '-' prefix). Throws std::invalid_argument
    /// on malformed text and std::domain_error on a zero denominator.
    static Rational parse(std::string_view text)
    {
        auto is_int = [](std::string_view s) {
            if (!s.empty() && (s.front() == '-' || s.front() == '+'))
                s.remove_prefix(1);
            if (s.empty())
                return false;
            for (char ch : s)
                if (ch < '0' || ch > '9')
                    return false;
            return true;
        };
        auto to_int = [](std::string_view s) {
            if (!s.empty() && s.front() == '+')
                s.remove_prefix(1);
            return Integer(std::string(s), 10);
        };
        auto slash = text.find('/');
        if (slash == std::string_view::npos) {
            if (!is_int(text))
                throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
            return Rational(to_int(text));
        }
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+')
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        return Rational(to_int(num), to_int(den));
    }

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    double to_double() const { return value_.get_d(); }

    std::string to_string() const
    {
        if (value_.get_den() == 1)
            return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero())
            throw std::domain_error("rational division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class value_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// r^e for e >= 0, by repeated squaring.
inline Rational pow(const Rational& r, std::uint64_t e)
{
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), r.numerator().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), r.denominator().get_mpz_t(), e);
    return Rational(num, den);
}

} // namespace trigrat
