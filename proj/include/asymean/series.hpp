#pragma once

#include <initializer_list>
#include <vector>

#include "asymean/rational.hpp"

namespace asymean {

/// Truncated power series a_0 + a_1 u + ... + a_N u^N.  The truncation order
/// N is fixed at construction and nothing beyond it is ever read or written.
class Series
{
public:
    Series() = default;
    /// All-zero series of order N.
    explicit Series(int order);
    Series(std::initializer_list<Rational> coeffs, int order);
    Series(std::vector<Rational> coeffs, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](int n) const { return c_[static_cast<std::size_t>(n)]; }
    Rational& operator[](int n) { return c_[static_cast<std::size_t>(n)]; }
    /// Coefficient n, or zero past the truncation order.
    Rational at(int n) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    /// Same coefficients cut (or zero-padded) to a different order.
    Series truncated(int order) const;
    /// Index of the first nonzero coefficient, or -1 if all are zero.
    int valuation() const;

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Rational& s);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const Rational& s) { return a *= s; }
    Series operator-() const;

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<Rational> c_;
};

/// Cauchy product truncated at order N.
Series multiply(const Series& a, const Series& b, int N);

/// Coefficients P[n, r, a] of a(u)^r for n = 0..N, by the recursion
///   P[0] = a_0^r,  P[n] = 1/(n a_0) * sum_{k=1}^{n} (k(1+r) - n) a_k P[n-k].
/// a_0 must be nonzero; a non-integer r additionally needs a_0 = 1.
Series power(const Series& a, const Rational& r, int N);

/// a(u)^n for a nonnegative integer n by repeated squaring.  Unlike power()
/// this places no condition on a_0.
Series integerPower(const Series& a, unsigned n, int N);

/// Taylor coefficients of outer(inner(u)); inner must have zero constant term.
Series compose(const Series& outer, const Series& inner, int N);

/// Formal antiderivative with zero constant term.
Series integrate(const Series& a, int N);

Series derivative(const Series& a);

/// u^shift * a(u), truncated at order N.
Series shiftUp(const Series& a, int shift, int N);

/// a(u) / u^shift; the discarded low coefficients must be zero.
Series shiftDown(const Series& a, int shift);

} // namespace asymean
