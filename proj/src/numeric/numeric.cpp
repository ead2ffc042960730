#include "asymean/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "asymean/error.hpp"
#include "kernels.hpp"

namespace asymean {

namespace {

constexpr double kDiagonalThreshold = 1e-6;

void requirePositive(double a, double b)
{
    if (!(a > 0) || !(b > 0) || !std::isfinite(a) || !std::isfinite(b))
        throw ParameterError("means are defined for positive finite arguments");
}

// x * sum_{n<=3} a_n u^n around x = (a+b)/2, u = |b-a|/(a+b).
double nearDiagonal(const MeanSpec& spec, double lo, double hi)
{
    const MeanExpansion e = expand(spec, 3);
    const double x = (lo + hi) / 2;
    const double u = (hi - lo) / (lo + hi);
    double sum = 0;
    for (int n = 3; n >= 0; --n)
        sum = sum * u + e.at(n).toDouble();
    return x * sum;
}

double clampMean(double v, double lo, double hi)
{
    return std::clamp(v, lo, hi);
}

} // namespace

double evalMean(const MeanSpec& spec, double a, double b)
{
    requirePositive(a, b);
    if (a == b)
        return a;
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);
    if (hi - lo <= kDiagonalThreshold * hi)
        return clampMean(nearDiagonal(spec, lo, hi), lo, hi);
    return clampMean(detail::closedForm<double>(spec, lo, hi), lo, hi);
}

double powerMean(double p, double a, double b)
{
    requirePositive(a, b);
    if (a == b)
        return a;
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);
    return clampMean(detail::powerMeanValue<double>(p, lo, hi), lo, hi);
}

double evalF(const MeanSpec& spec, double x)
{
    if (!(x > 0))
        throw ParameterError("f_M is evaluated at x > 0");
    return evalMean(spec, std::exp(-x), std::exp(x));
}

double evalResultant(const MeanModel& K, const MeanModel& M, const MeanModel& N, double s, double t)
{
    requirePositive(s, t);
    const double n = N.eval(s, t);
    return K.eval(M.eval(s, n), M.eval(n, t));
}

double evalResultant(const MeanSpec& K, const MeanSpec& M, const MeanSpec& N, double s, double t)
{
    return evalResultant(model(K), model(M), model(N), s, t);
}

std::optional<double> endpointValue(const MeanSpec& spec)
{
    using std::numbers::pi;
    return std::visit([](const auto& m) -> std::optional<double> {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, PowerMean>) {
            if (m.p.sign() <= 0)
                return 0.0;
            return std::pow(2.0, -m.p.reciprocal().toDouble());
        } else if constexpr (std::is_same_v<T, LAlphaMean>) {
            return 0.0;
        } else if constexpr (std::is_same_v<T, SAlphaMean>) {
            return 2 * m.alpha.abs().toDouble() / pi;
        } else if constexpr (std::is_same_v<T, IndexedMean>) {
            if (m.which == 2)
                return std::sqrt(2.0) / pi;
            if (m.which == 3)
                return 2 / pi;
            return 0.0;
        } else if constexpr (std::is_same_v<T, MAlphaRMean>) {
            const Rational sum = m.alpha + m.r;
            return sum.sign() >= 0 ? 0.0 : -sum.toDouble();
        } else {
            return std::nullopt;
        }
    }, spec);
}

MeanModel model(const MeanSpec& spec)
{
    validate(spec);
    return MeanModel{describe(spec), [spec](double a, double b) { return evalMean(spec, a, b); },
                     endpointValue(spec)};
}

MeanModel powerMeanModel(double p)
{
    std::optional<double> end = p > 0 ? std::pow(2.0, -1 / p) : 0.0;
    return MeanModel{"B(" + std::to_string(p) + ")", [p](double a, double b) { return powerMean(p, a, b); },
                     end};
}

std::string LimitEstimate::methodName() const
{
    return method == Method::ClosedForm ? "closed-form" : "extrapolated (numeric evidence)";
}

LimitEstimate extrapolateLimit(const std::function<double(double)>& g)
{
    std::vector<double> v;
    for (int k = 3; k <= 8; ++k)
        v.push_back(g(std::pow(10.0, -k)));
    for (double x : v)
        if (!std::isfinite(x))
            throw Error("limit_not_resolved", "limit not resolved: non-finite samples");

    const auto close = [](double a, double b, double rel) {
        return std::abs(a - b) <= rel * std::max(1.0, std::abs(b));
    };
    const std::size_t n = v.size();
    if (close(v[n - 2], v[n - 1], 1e-9))
        return {v[n - 1], LimitEstimate::Method::Extrapolated};

    // Aitken's delta-squared on the last two triples; exact for L + c s^gamma.
    auto aitken = [&](std::size_t k) {
        const double d1 = v[k + 1] - v[k];
        const double d2 = v[k + 2] - v[k + 1];
        const double den = d2 - d1;
        if (den == 0)
            return v[k + 2];
        return v[k + 2] - d2 * d2 / den;
    };
    const double a1 = aitken(n - 4);
    const double a2 = aitken(n - 3);
    if (std::isfinite(a1) && std::isfinite(a2) && close(a1, a2, 1e-6))
        return {a2, LimitEstimate::Method::Extrapolated};
    throw Error("limit_not_resolved", "limit not resolved: samples at s = 1e-3..1e-8 do not settle");
}

LimitEstimate boundaryLimit(const MeanModel& m)
{
    if (m.endpoint)
        return {*m.endpoint, LimitEstimate::Method::ClosedForm};
    return extrapolateLimit([&](double s) { return m.eval(s, 1 - s); });
}

LimitEstimate boundaryLimit(const MeanSpec& spec)
{
    return boundaryLimit(model(spec));
}

LimitEstimate boundaryLimitResultant(const MeanModel& K, const MeanModel& M, const MeanModel& N)
{
    if (K.endpoint && M.endpoint && N.endpoint) {
        // N(s, 1-s) -> n0, M(s, n0) -> n0 * m(0,1), M(n0, 1) -> v
        const double n0 = *N.endpoint;
        const double left = n0 * *M.endpoint;
        const double right = n0 > 0 ? M.eval(n0, 1.0) : *M.endpoint;
        double value;
        if (left == 0 && right == 0)
            value = 0;
        else if (left == 0)
            value = right * *K.endpoint;
        else if (right == 0)
            value = left * *K.endpoint;
        else
            value = K.eval(left, right);
        return {value, LimitEstimate::Method::ClosedForm};
    }
    return extrapolateLimit([&](double s) { return evalResultant(K, M, N, s, 1 - s); });
}

void GridSpec::validate() const
{
    if (!(lo > 0) || !(hi > lo) || count < 2)
        throw ParameterError("grid needs 0 < lo < hi and at least two points");
}

std::vector<double> GridSpec::points() const
{
    validate();
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const double f = static_cast<double>(i) / (count - 1);
        out[static_cast<std::size_t>(i)] = scale == Scale::Linear
            ? lo + (hi - lo) * f
            : std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * f);
    }
    out.back() = hi;
    return out;
}

std::string ComparisonReport::verdictName(Verdict v)
{
    switch (v) {
    case Verdict::FirstBelow: return "first-below";
    case Verdict::SecondBelow: return "second-below";
    case Verdict::Crossing: return "crossing";
    case Verdict::Equal: return "equal";
    }
    return "";
}

ComparisonReport compareScan(const MeanSpec& m1, const MeanSpec& m2, const GridSpec& grid)
{
    ComparisonReport report;
    report.minGap = std::numeric_limits<double>::infinity();
    bool below = false, above = false;
    int lastSign = 0;
    double lastX = 0;
    for (double x : grid.points()) {
        const double f1 = evalF(m1, x);
        const double f2 = evalF(m2, x);
        const double d = f1 - f2;
        report.minGap = std::min(report.minGap, std::abs(d));
        const double tol = 1e-13 * std::max(std::abs(f1), std::abs(f2));
        const int sign = d > tol ? 1 : d < -tol ? -1 : 0;
        if (sign == 0)
            continue;
        (sign < 0 ? below : above) = true;
        if (lastSign != 0 && sign != lastSign)
            report.witnesses.push_back({lastX, x});
        lastSign = sign;
        lastX = x;
    }
    if (below && above)
        report.verdict = ComparisonReport::Verdict::Crossing;
    else if (below)
        report.verdict = ComparisonReport::Verdict::FirstBelow;
    else if (above)
        report.verdict = ComparisonReport::Verdict::SecondBelow;
    else
        report.verdict = ComparisonReport::Verdict::Equal;
    return report;
}

} // namespace asymean
