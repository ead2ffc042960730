#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "asymean/means.hpp"

namespace asymean {

/// A mean as a plain function of two positive doubles, plus its value at
/// (0, 1) when a closed form is known.  Lets power means with irrational
/// exponents take part in numeric checks.
struct MeanModel
{
    std::string label;
    std::function<double(double, double)> eval;
    std::optional<double> endpoint;
};

MeanModel model(const MeanSpec& spec);
MeanModel powerMeanModel(double p);

/// M(a, b) for a, b > 0.  Close to the diagonal the closed forms are 0/0, so
/// a short series around (a + b)/2 is used there instead.
double evalMean(const MeanSpec& spec, double a, double b);
double powerMean(double p, double a, double b);

/// f_M(x) = M(e^-x, e^x), so that M(a, b) = sqrt(ab) f_M(ln(b/a)/2).
double evalF(const MeanSpec& spec, double x);

/// K(M(s, N(s, t)), M(N(s, t), t)).
double evalResultant(const MeanSpec& K, const MeanSpec& M, const MeanSpec& N, double s, double t);
double evalResultant(const MeanModel& K, const MeanModel& M, const MeanModel& N, double s, double t);

/// Closed-form lim_{s->0} M(s, 1 - s) = M(0, 1) when one is known.
std::optional<double> endpointValue(const MeanSpec& spec);

struct LimitEstimate
{
    enum class Method { ClosedForm, Extrapolated };
    double value = 0;
    Method method = Method::ClosedForm;

    /// "closed-form" or "extrapolated (numeric evidence)".
    std::string methodName() const;
};

/// lim_{s->0} g(s) from samples at s = 1e-3 ... 1e-8.  Throws
/// Error("limit_not_resolved") when the samples do not settle.
LimitEstimate extrapolateLimit(const std::function<double(double)>& g);

LimitEstimate boundaryLimit(const MeanSpec& spec);
LimitEstimate boundaryLimit(const MeanModel& m);
/// Limit of R(K, M, N)(s, 1 - s); composed from endpoint values when all
/// three are known, extrapolated otherwise.
LimitEstimate boundaryLimitResultant(const MeanModel& K, const MeanModel& M, const MeanModel& N);

struct GridSpec
{
    enum class Scale { Linear, Logarithmic };
    double lo = 0;
    double hi = 0;
    int count = 0;
    Scale scale = Scale::Linear;

    /// Throws ParameterError unless 0 < lo < hi and count >= 2.
    void validate() const;
    std::vector<double> points() const;
};

struct ComparisonReport
{
    enum class Verdict { FirstBelow, SecondBelow, Crossing, Equal };
    struct Witness
    {
        double lo;   // grid point with one sign of f1 - f2
        double hi;   // next grid point, opposite sign
    };

    Verdict verdict = Verdict::Equal;
    std::vector<Witness> witnesses;
    /// Smallest |f1 - f2| over the grid.
    double minGap = 0;

    static std::string verdictName(Verdict v);
};

/// Compares f_m1 and f_m2 at the grid points x.
ComparisonReport compareScan(const MeanSpec& m1, const MeanSpec& m2, const GridSpec& grid);

struct DecayReport
{
    int order = 0;
    /// Least-squares slope of log|remainder| against log x.
    std::optional<double> slope;
    /// Exponent of x in the first omitted nonzero term, if any within reach.
    std::optional<int> expectedExponent;
    bool exactZero = false;
    bool noiseFloor = false;
    std::vector<std::pair<double, double>> samples;   // (x, |remainder|)
};

/// Remainder of the order-N partial sum of M(x - t, x + t) on a grid of x,
/// evaluated in 100-digit floating point so the fit is not swamped by
/// double rounding at high orders.
DecayReport verifyExpansionDecay(const MeanSpec& spec, int N, double t, const GridSpec& xGrid);

} // namespace asymean
