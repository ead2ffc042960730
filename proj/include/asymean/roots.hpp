#pragma once

#include <string>
#include <utility>
#include <vector>

#include "asymean/polynomial.hpp"
#include "asymean/rational.hpp"

namespace asymean {

/// The number (a + sign*sqrt(b)) / c with b > 0 not a rational square and c > 0.
struct QuadraticSurd
{
    Rational a;
    Rational b;
    Rational c;
    int sign = 1;

    double toDouble() const;
    /// Monic x^2 - (2a/c) x + (a^2 - b)/c^2.
    Polynomial minimalPolynomial() const;
    std::pair<Rational, Rational> enclose(const Rational& width) const;
    /// s * this + t, still of the same form.
    QuadraticSurd affine(const Rational& s, const Rational& t) const;
    std::string toString() const;

    friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
};

/// Exact element u + v*sqrt(b) of Q(sqrt(b)).
struct QuadraticValue
{
    Rational u;
    Rational v;
    Rational b;

    bool isRational() const { return v.isZero(); }
    int sign() const;
    double toDouble() const;
    std::string toString() const;
};

/// One real root of a polynomial, in the most exact form available.
struct RootDescription
{
    enum class Kind { ExactRational, QuadraticSurd, IsolatedInterval };

    Kind kind = Kind::ExactRational;
    Rational value;          // ExactRational
    QuadraticSurd surd;      // QuadraticSurd
    Rational lo, hi;         // IsolatedInterval: open interval with a sign change
    Polynomial defining;     // IsolatedInterval: square-free polynomial with this simple root

    static RootDescription exact(Rational v);
    static RootDescription quadratic(QuadraticSurd s);
    static RootDescription interval(Rational lo, Rational hi, Polynomial f);

    double approx() const;
    /// Rational interval of width <= `width` containing the root.
    std::pair<Rational, Rational> enclose(const Rational& width) const;
    std::string kindName() const;
    std::string toString() const;
};

/// Width to which non-quadratic irrational roots are isolated.
Rational defaultIsolationWidth();

/// All distinct real roots, sorted ascending.  Rational roots are exact,
/// roots with a quadratic minimal polynomial are surds, everything else is
/// an isolating interval of width <= defaultIsolationWidth().
std::vector<RootDescription> isolateRealRoots(const Polynomial& f);

/// Number of sign variations in a coefficient sequence, zeros skipped.
int signVariations(const std::vector<Rational>& coeffs);

/// Shrinks (lo, hi), which must bracket a simple root of f, to width <= width.
void refineInterval(const Polynomial& f, Rational& lo, Rational& hi, const Rational& width);

} // namespace asymean
