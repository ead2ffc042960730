#include "asymean/error.hpp"
#include "asymean/means.hpp"
#include "asymean/resultant.hpp"

namespace asymean {

// At order n >= 3 the n-th coefficient of R(M, M, M) is affine in a_n with
// slope 1/2 + 2^(1-n), so each step is a single linear solve.  Order 2 is the
// free parameter.
MeanExpansion expandStable(const Rational& a2, int N)
{
    if (N < 0)
        throw ParameterError("order must be nonnegative");
    Series a(N);
    a[0] = Rational(1);
    if (N >= 2)
        a[2] = a2;
    for (int n = 3; n <= N; ++n) {
        Series trial = a.truncated(n);
        trial[n] = Rational(0);
        const MeanExpansion lo = makeExpansion(trial);
        const Rational r0 = resultantExpansion(lo, lo, lo, n).at(n);
        trial[n] = Rational(1);
        const MeanExpansion hi = makeExpansion(trial);
        const Rational r1 = resultantExpansion(hi, hi, hi, n).at(n);
        const Rational denom = Rational(1) - (r1 - r0);
        if (denom.isZero())
            throw Error("singular_step", "stable expansion: singular step at order " + std::to_string(n));
        a[n] = r0 / denom;
    }
    return makeExpansion(std::move(a));
}

} // namespace asymean
