#pragma once

// Closed-form mean evaluation shared by the double and the extended
// precision paths.

#include <cmath>
#include <type_traits>

#include "asymean/error.hpp"
#include "asymean/means.hpp"

namespace asymean::detail {

template <class Real>
Real toReal(const Rational& q)
{
    if constexpr (std::is_same_v<Real, double>)
        return q.toDouble();
    else
        return Real(q.num().get_str()) / Real(q.den().get_str());
}

template <class Real>
Real powerMeanValue(const Real& p, const Real& lo, const Real& hi)
{
    using std::pow;
    using std::sqrt;
    if (p == 0)
        return sqrt(lo * hi);
    if (p == 1)
        return (lo + hi) / 2;
    const Real rho = lo / hi;
    if (p > 0)
        return hi * pow((1 + pow(rho, p)) / 2, 1 / p);
    return lo * pow((1 + pow(rho, -p)) / 2, 1 / p);
}

// psi(Lambda) for the indexed means, written to avoid cancellation at small Lambda.
template <class Real>
Real indexedDenominator(int which, const Real& L)
{
    using std::asinh;
    using std::atan;
    using std::log1p;
    using std::sqrt;
    const Real s2 = sqrt(Real(2));
    switch (which) {
    case 1: return log1p(L);
    case 2: return s2 * atan(L / s2);
    case 3: return 2 * atan(L / (2 + L));
    case 4: return s2 * asinh(L / s2);
    case 5: {
        // asinh(1 + L) - asinh(1) = log1p(d / (1 + sqrt2))
        const Real d = L + L * (2 + L) / (sqrt(1 + (1 + L) * (1 + L)) + s2);
        return s2 * log1p(d / (1 + s2));
    }
    default: throw ParameterError("indexed mean must be M1..M5");
    }
}

// Value away from the diagonal; lo < hi.
template <class Real>
Real closedForm(const MeanSpec& spec, const Real& lo, const Real& hi)
{
    using std::atan;
    using std::expm1;
    using std::log;
    using std::log1p;
    using std::sinh;
    using std::tanh;
    const Real diff = hi - lo;
    const Real L = log(hi / lo);
    return std::visit([&](const auto& m) -> Real {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, PowerMean>) {
            return powerMeanValue<Real>(toReal<Real>(m.p), lo, hi);
        } else if constexpr (std::is_same_v<T, LAlphaMean>) {
            if (m.alpha.isZero())
                return diff / L;
            const Real a = toReal<Real>(m.alpha);
            return a * diff / sinh(a * L);
        } else if constexpr (std::is_same_v<T, SAlphaMean>) {
            if (m.alpha.isZero())
                return diff / L;
            const Real a = toReal<Real>(m.alpha);
            return a * diff / (2 * atan(tanh(a * L / 2)));
        } else if constexpr (std::is_same_v<T, IndexedMean>) {
            return diff / indexedDenominator<Real>(m.which, L);
        } else if constexpr (std::is_same_v<T, MAlphaRMean>) {
            const Real r = toReal<Real>(m.r);
            const Rational sumQ = m.alpha + m.r;
            if (sumQ.isZero())
                return diff * r / log1p(r * L);
            const Real sum = toReal<Real>(sumQ);
            return diff * sum / expm1(sum / r * log1p(r * L));
        } else {
            // mu(L) = sum c_n L^(2n+1)
            Real mu = 0;
            for (int n = m.c.order(); n >= 0; --n)
                mu = mu * L * L + toReal<Real>(m.c[n]);
            return diff / (mu * L);
        }
    }, spec);
}

} // namespace asymean::detail
