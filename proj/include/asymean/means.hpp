#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "asymean/rational.hpp"
#include "asymean/series.hpp"

namespace asymean {

// Mean families.  Each describes a symmetric homogeneous mean M(a, b).

/// ((a^p + b^p)/2)^(1/p), geometric mean at p = 0.
struct PowerMean { Rational p; };
/// Generated by u = cosh(alpha x); |alpha| <= 1.
struct LAlphaMean { Rational alpha; };
/// Generated by u = 1/cosh(alpha x); |alpha| <= 1.
struct SAlphaMean { Rational alpha; };
/// One of the five log-ratio means M_1 ... M_5.
struct IndexedMean { int which; };
/// (r+alpha)|b-a| / ((1 + r|ln b - ln a|)^((r+alpha)/r) - 1); r > 0, |alpha| <= 1.
struct MAlphaRMean { Rational alpha; Rational r; };
/// |a-b| / mu(|ln(a/b)|) for an odd mu(x) = sum c_n x^(2n+1) with c_0 = 1.
struct MuGeneratedMean { Series c; };

using MeanSpec = std::variant<PowerMean, LAlphaMean, SAlphaMean, IndexedMean, MAlphaRMean, MuGeneratedMean>;

/// Parses "A", "G", "H", "L", "P", "T", "HZ", "M1".."M5", "B(p)", "Lalpha(a)",
/// "Salpha(a)", "Malphar(a,r)".  Arguments are exact fractions.
MeanSpec parseMeanSpec(std::string_view text);

/// Throws ParameterError when the parameters leave the admissible range.
void validate(const MeanSpec& spec);

std::string describe(const MeanSpec& spec);

enum class Parity { EvenOnly, Mixed };

std::string parityName(Parity p);

/// Coefficients a_n of M(x - t, x + t) ~ sum_n a_n t^n x^(1-n), t > 0.
/// Even-only expansions keep their zero odd slots, so index n is always the
/// power of t.
struct MeanExpansion
{
    Series coeffs;
    Parity parity = Parity::EvenOnly;

    int order() const { return coeffs.order(); }
    Rational at(int n) const { return coeffs.at(n); }
};

/// Parity read off the coefficients: even-only iff every odd slot is zero.
Parity classifyParity(const Series& coeffs);

MeanExpansion makeExpansion(Series coeffs);

MeanExpansion expandPowerMean(const Rational& p, int N);
MeanExpansion expandLAlpha(const Rational& alpha, int N);
MeanExpansion expandSAlpha(const Rational& alpha, int N);
/// c holds the odd-function coefficients c_0, c_1, ... (c_0 must be 1).
MeanExpansion expandMuGenerated(const Series& c, int N);
MeanExpansion expandIndexed(int which, int N);
MeanExpansion expandMAlphaR(const Rational& alpha, const Rational& r, int N);

/// Expansion of the stable mean with t^2 coefficient a2, solved order by
/// order from R(M, M, M) = M.
MeanExpansion expandStable(const Rational& a2, int N);

MeanExpansion expand(const MeanSpec& spec, int N);

/// Coefficients of the logarithmic mean (mu = identity).
MeanExpansion expandLogarithmic(int N);

} // namespace asymean
