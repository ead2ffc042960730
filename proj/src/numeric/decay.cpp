#include <cmath>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "asymean/error.hpp"
#include "asymean/numeric.hpp"
#include "kernels.hpp"

namespace asymean {

namespace {

using Wide = boost::multiprecision::cpp_bin_float_100;

// Relative remainders below this are indistinguishable from rounding.
const Wide kNoise("1e-90");

// How far past N to look for the next nonzero coefficient.
constexpr int kLookahead = 12;

} // namespace

DecayReport verifyExpansionDecay(const MeanSpec& spec, int N, double t, const GridSpec& xGrid)
{
    if (N < 0)
        throw ParameterError("decay check needs a nonnegative order");
    if (!(t > 0))
        throw ParameterError("decay check needs t > 0");
    xGrid.validate();
    if (xGrid.lo <= t)
        throw ParameterError("decay grid must satisfy x > t");

    const MeanExpansion e = expand(spec, N + kLookahead);
    DecayReport report;
    report.order = N;
    for (int n = N + 1; n <= N + kLookahead; ++n) {
        if (!e.at(n).isZero()) {
            report.expectedExponent = 1 - n;
            break;
        }
    }

    std::vector<Wide> coeffs;
    for (int n = 0; n <= N; ++n)
        coeffs.push_back(detail::toReal<Wide>(e.at(n)));

    bool allZero = true;
    std::vector<double> lx, ly;
    for (double xd : xGrid.points()) {
        const Wide x(xd);
        const Wide tw(t);
        const Wide value = detail::closedForm<Wide>(spec, x - tw, x + tw);
        const Wide u = tw / x;
        Wide partial = 0;
        for (int n = N; n >= 0; --n)
            partial = partial * u + coeffs[static_cast<std::size_t>(n)];
        partial *= x;
        const Wide rem = abs(value - partial);
        report.samples.emplace_back(xd, rem.convert_to<double>());
        if (rem != 0)
            allZero = false;
        if (rem / x < kNoise)
            continue;
        lx.push_back(std::log(xd));
        ly.push_back(log(rem).convert_to<double>());
    }

    if (allZero) {
        report.exactZero = true;
        return report;
    }
    if (lx.size() < 3) {
        report.noiseFloor = true;
        return report;
    }
    const double n = static_cast<double>(lx.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    report.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return report;
}

} // namespace asymean
