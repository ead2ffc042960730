#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace asymean {

/// Exact fraction over arbitrary-precision integers, always kept in lowest
/// terms with a positive denominator.
class Rational
{
public:
    Rational() = default;
    Rational(long value) : v_(value) {}
    Rational(int value) : v_(static_cast<long>(value)) {}
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpz_class& value) : v_(value) {}
    explicit Rational(const mpq_class& value);

    /// Parses "n" or "n/d" (optional sign, decimal digits).  Decimal points
    /// and exponents are rejected so that no value silently loses precision.
    static Rational parse(std::string_view text);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool isZero() const { return sgn(v_) == 0; }
    bool isInteger() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    double toDouble() const { return v_.get_d(); }
    std::string toString() const;

    Rational abs() const;
    Rational reciprocal() const;
    Rational pow(long exponent) const;
    /// Largest integer not exceeding the value.
    mpz_class floor() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Generalized binomial coefficient r(r-1)...(r-k+1)/k!.
Rational binomial(const Rational& r, unsigned k);

/// Exact square root when the argument is the square of a rational.
bool rationalSqrt(const Rational& value, Rational& root);

/// Rational interval [lo, hi] of width at most `width` containing sqrt(value).
std::pair<Rational, Rational> sqrtEnclosure(const Rational& value, const Rational& width);

} // namespace asymean
