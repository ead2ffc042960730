#pragma once

// Small deterministic generators for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "asymean/means.hpp"
#include "asymean/rational.hpp"
#include "asymean/series.hpp"

namespace testgen {

class Gen
{
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi)
    {
        return std::uniform_int_distribution<long>(lo, hi)(rng_);
    }

    asymean::Rational rational(long maxNum = 9, long maxDen = 7)
    {
        return asymean::Rational(integer(-maxNum, maxNum), integer(1, maxDen));
    }

    asymean::Rational nonzeroRational(long maxNum = 9, long maxDen = 7)
    {
        asymean::Rational r;
        do
            r = rational(maxNum, maxDen);
        while (r.isZero());
        return r;
    }

    /// |value| <= 1
    asymean::Rational unitRational(long maxDen = 9)
    {
        const long den = integer(1, maxDen);
        return asymean::Rational(integer(-den, den), den);
    }

    double real(double lo, double hi)
    {
        return std::uniform_real_distribution<double>(lo, hi)(rng_);
    }

    /// Series of the given order with a chosen constant term.
    asymean::Series series(int order, const asymean::Rational& constant)
    {
        asymean::Series s(order);
        s[0] = constant;
        for (int i = 1; i <= order; ++i)
            s[i] = rational();
        return s;
    }

    /// Mean-like expansion: a_0 = 1, the remaining coefficients random.
    asymean::MeanExpansion expansion(int order, bool evenOnly)
    {
        asymean::Series s(order);
        s[0] = asymean::Rational(1);
        for (int i = 1; i <= order; ++i)
            if (!evenOnly || i % 2 == 0)
                s[i] = rational();
        return asymean::makeExpansion(s);
    }

private:
    std::mt19937_64 rng_;
};

} // namespace testgen
