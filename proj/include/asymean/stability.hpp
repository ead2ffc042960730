#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asymean/means.hpp"
#include "asymean/numeric.hpp"
#include "asymean/polynomial.hpp"
#include "asymean/roots.hpp"

namespace asymean {

enum class AsymptoticSign { Positive, Negative, Zero };
std::string signName(AsymptoticSign s);

/// Coefficients of (M - R(B_p, M, B_q))(x - t, x + t), index = power of t.
struct DifferenceExpansion
{
    Series coeffs;
    /// First nonzero index; empty when every coefficient to the order vanishes.
    std::optional<int> firstNonzero;
    AsymptoticSign sign = AsymptoticSign::Zero;
};

DifferenceExpansion differenceExpansion(const MeanExpansion& M, const Rational& p, const Rational& q, int order);

/// q = slope * p + intercept.
struct AffineMap
{
    Rational slope;
    Rational intercept;

    Rational operator()(const Rational& p) const { return slope * p + intercept; }
    std::string toString() const;
};

/// Relation between p and q that makes the t^2 coefficient of the difference
/// vanish.  Throws Error("parameter_independent") when the leading term of
/// the difference does not depend on (p, q), as for means with a nonzero
/// t-coefficient.
AffineMap firstOrderLocus(const MeanExpansion& M);

/// The coefficient of t^index in the difference along q = locus(p), as an
/// exact polynomial in p.  Recovered by interpolation with one extra sample
/// as a residual check; samples are taken at p = shift, shift + 1, ...
Polynomial coefficientPolynomial(const MeanExpansion& M, int index, const AffineMap& locus,
                                 const Rational& shift = Rational(0));

/// First nonzero coefficient of the difference at an optimal (p, q).
struct LeadingCoefficient
{
    enum class Kind { Exact, Interval };
    Kind kind = Kind::Exact;
    /// Exact value in Q(sqrt b); v = 0 for rational values.
    QuadraticValue exact;
    /// Certified enclosure when the parameter is only known by isolation.
    Rational lo, hi;
    int sign = 0;

    double approx() const;
    std::string toString() const;
};

enum class Relation { CandidateSub, CandidateSuper, Neither, Stabilizable };
std::string relationName(Relation r);

/// Limits at (s, 1 - s), s -> 0, of the mean and of the resultant.
struct BoundaryEvidence
{
    double p = 0;
    double q = 0;
    double meanLimit = 0;
    double resultantLimit = 0;
    std::string method;
    /// Sign of M - R at the boundary disagrees with the asymptotic sign.
    bool conflict = false;
};

struct OptimalSolution
{
    RootDescription p;
    RootDescription q;
    /// Power of t of the leading nonzero coefficient; empty when the
    /// difference vanishes through the tested order.
    std::optional<int> achievedOrder;
    std::optional<LeadingCoefficient> leading;
    std::optional<BoundaryEvidence> boundary;
    Relation relation = Relation::Neither;
};

struct StabilizabilityVerdict
{
    Relation relation = Relation::Neither;
    int maxOrder = 0;
    /// Set when the leading term of the difference is the same for all (p, q).
    bool parameterFree = false;
    std::optional<AffineMap> locus;
    /// Leading coefficient for generic parameters: a constant when
    /// parameterFree, else the first non-vanishing coefficient polynomial on
    /// the locus.
    int genericOrder = 0;
    Polynomial genericLeading;
    std::vector<OptimalSolution> solutions;
    /// The whole locus makes the difference vanish through maxOrder.
    bool familyStabilizes = false;
    /// Boundary checks at sampled (p, q) when there are no isolated solutions.
    std::vector<BoundaryEvidence> sampledBoundary;
};

/// Full analysis of R(B_p, M, B_q) against M.  Boundary evidence needs a
/// numeric model of M; without one the verdict rests on asymptotics alone.
StabilizabilityVerdict optimalParameters(const MeanExpansion& M, int maxOrder,
                                         const std::optional<MeanModel>& numeric = std::nullopt);
StabilizabilityVerdict optimalParameters(const MeanSpec& spec, int maxOrder);

struct StabilityReport
{
    bool stable = false;
    int order = 0;
    std::optional<int> mismatchIndex;
    /// a_n(M) - a_n(R(M, M, M)) at the first mismatch.
    Rational defect;
};

/// Compares M with R(M, M, M) coefficient by coefficient.
StabilityReport isStable(const MeanExpansion& M);
StabilityReport isStable(const MeanSpec& spec, int order);

enum class StabilityFamily { LAlpha, SAlpha };

/// Parameters alpha in [-1, 1] for which the family member is stable,
/// recovered from the common roots of the low-order defect polynomials in
/// alpha^2 and confirmed with isStable at the given order.
std::vector<RootDescription> stabilityParameterScan(StabilityFamily family, int order);

} // namespace asymean
