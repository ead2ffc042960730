#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "asymean/rational.hpp"

namespace asymean {

/// Univariate polynomial over the rationals.  coeffs()[i] multiplies x^i;
/// the leading coefficient is nonzero and the zero polynomial has no
/// coefficients at all.
class Polynomial
{
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    static Polynomial constant(const Rational& c) { return Polynomial({c}); }
    /// x - root
    static Polynomial linearFactor(const Rational& root) { return Polynomial({-root, Rational(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool isZero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const;
    const Rational& leading() const { return c_.back(); }

    Rational operator()(const Rational& x) const;
    double evaluate(double x) const;

    Polynomial derivative() const;
    Polynomial monic() const;
    /// Integer coefficients with content 1 and positive leading coefficient,
    /// a positive rational multiple of *this.
    std::vector<mpz_class> primitiveIntegerCoeffs() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    /// Euclidean division; throws on a zero divisor.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

    /// Sign of f at x without materializing f(x) beyond what is needed.
    int signAt(const Rational& x) const { return (*this)(x).sign(); }

    std::string toString(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Monic greatest common divisor (zero if both are zero).
Polynomial gcd(Polynomial a, Polynomial b);

/// f / gcd(f, f'), made monic: same roots, all simple.
Polynomial squareFreePart(const Polynomial& f);

/// Unique polynomial of degree < points.size() through the given points.
Polynomial lagrangeInterpolate(std::span<const std::pair<Rational, Rational>> points);

} // namespace asymean
