#include <doctest.h>

#include "asymean/error.hpp"
#include "asymean/resultant.hpp"
#include "generators.hpp"

using namespace asymean;

namespace {

using R = Rational;

// Closed forms for the first three resultant coefficients in terms of the
// coefficients of K, M and N.
R firstCoeff(const MeanExpansion& K, const MeanExpansion& M, const MeanExpansion& N)
{
    const R k1 = K.at(1), m1 = M.at(1), n1 = N.at(1);
    return (k1 + m1 + n1 - k1 * m1 * n1) / R(2);
}

R secondCoeff(const MeanExpansion& K, const MeanExpansion& M, const MeanExpansion& N)
{
    const R k1 = K.at(1), m1 = M.at(1), n1 = N.at(1);
    const R k2 = K.at(2), m2 = M.at(2), n2 = N.at(2);
    const R one(1), two(2);
    const R t = m1 * n1 - one;
    return (n2 * (two - two * k1 * m1) + k2 * t * t + m2 + m2 * n1 * (n1 - two * k1)) / R(4);
}

R thirdCoeff(const MeanExpansion& K, const MeanExpansion& M, const MeanExpansion& N)
{
    const R k1 = K.at(1), m1 = M.at(1), n1 = N.at(1);
    const R k2 = K.at(2), m2 = M.at(2), n2 = N.at(2);
    const R k3 = K.at(3), m3 = M.at(3), n3 = N.at(3);
    const R one(1);
    const R t = m1 * n1 - one;
    const R sum = R(-32) * n3 * (k1 * m1 - one)
                - R(8) * k3 * t * t * t
                - R(8) * k2 * t * (n1 * n1 * m1 - m1 * (R(4) * n2 + one) + n1 * (m1 * m1 - R(4) * m2 - one))
                + R(8) * m2 * (k1 - n1) * (n1 * n1 - R(4) * n2 - one)
                - R(8) * m3 * (k1 * n1 * (R(3) + n1 * n1) - R(3) * n1 * n1 - one);
    return sum / R(64);
}

MeanExpansion caseOneExpansion(testgen::Gen& g, int order)
{
    for (;;) {
        MeanExpansion e = g.expansion(order, false);
        if (e.at(1).abs() != R(1))
            return e;
    }
}

} // namespace

TEST_CASE("first three coefficients match the closed forms")
{
    testgen::Gen g(17);
    for (int i = 0; i < 50; ++i) {
        const MeanExpansion K = g.expansion(4, false), M = g.expansion(4, false), N = caseOneExpansion(g, 4);
        const MeanExpansion r = resultantExpansion(K, M, N, 3);
        CHECK(r.at(0) == R(1));
        CHECK(r.at(1) == firstCoeff(K, M, N));
        CHECK(r.at(2) == secondCoeff(K, M, N));
        CHECK(r.at(3) == thirdCoeff(K, M, N));
    }
}

TEST_CASE("closed forms also hold in the degenerate cases")
{
    testgen::Gen g(18);
    for (int i = 0; i < 20; ++i) {
        const MeanExpansion K = g.expansion(4, false), M = g.expansion(4, false);
        MeanExpansion N = g.expansion(4, false);
        N.coeffs[1] = R(i % 2 == 0 ? -1 : 1);
        N = makeExpansion(N.coeffs);
        CHECK(classifyCase(N) == (i % 2 == 0 ? ResultantCase::II : ResultantCase::III));
        for (PowerRoute route : {PowerRoute::Recursive, PowerRoute::Multiplicative}) {
            const MeanExpansion r = resultantExpansion(K, M, N, 3, route);
            CHECK(r.at(1) == firstCoeff(K, M, N));
            CHECK(r.at(2) == secondCoeff(K, M, N));
            CHECK(r.at(3) == thirdCoeff(K, M, N));
        }
    }
}

TEST_CASE("both power routes agree")
{
    testgen::Gen g(19);
    for (int i = 0; i < 15; ++i) {
        const MeanExpansion K = g.expansion(6, false), M = g.expansion(6, false);
        MeanExpansion N = g.expansion(6, false);
        if (i % 3 != 0) {
            N.coeffs[1] = R(i % 3 == 1 ? -1 : 1);
            N = makeExpansion(N.coeffs);
        }
        CHECK(resultantExpansion(K, M, N, 6, PowerRoute::Recursive).coeffs
              == resultantExpansion(K, M, N, 6, PowerRoute::Multiplicative).coeffs);
    }
}

TEST_CASE("resultants with power means on the outside")
{
    testgen::Gen g(20);
    for (int i = 0; i < 20; ++i) {
        const R p = g.rational(), q = g.rational();
        const MeanExpansion even = g.expansion(4, true);
        const MeanExpansion r = resultantPowerMeans(p, q, even, 4);
        const R e1 = even.at(2), e2 = even.at(4);
        CHECK(r.at(1).isZero());
        CHECK(r.at(2) == (R(2) * e1 + p + R(2) * q - R(3)) / R(8));
        CHECK(r.at(3).isZero());
        CHECK(r.at(4) == (R(24) * e2
                          + R(12) * e1 * (R(-4) * p * q + p + R(2) * q * (q + R(1)) + R(1))
                          - R(2) * p.pow(3) + R(3) * p * p + R(2) * p * (R(7) - R(6) * q)
                          + R(4) * q * (R(-4) * q * q + R(6) * q + R(7)) - R(39))
                             / R(384));

        const MeanExpansion mixed = g.expansion(3, false);
        const MeanExpansion rm = resultantPowerMeans(p, q, mixed, 3);
        CHECK(rm.at(1) == mixed.at(1) / R(2));
        CHECK(rm.at(2) == (R(2) * mixed.at(2) + p + R(2) * q - R(3)) / R(8));
        CHECK(rm.at(3) == (R(2) * mixed.at(3) - (p - R(1)) * (R(2) * q - R(1)) * mixed.at(1)) / R(16));

        CHECK(r.coeffs == resultantExpansion(expandPowerMean(p, 4), even, expandPowerMean(q, 4), 4).coeffs);
    }
}

TEST_CASE("structural identities")
{
    testgen::Gen g(21);
    const MeanExpansion A = expandPowerMean(R(1), 8);
    for (int i = 0; i < 15; ++i) {
        // R(A, A, N)(s, t) = (s + t)/4 + N(s, t)/2
        const MeanExpansion N = caseOneExpansion(g, 8);
        const MeanExpansion r = resultantExpansion(A, A, N, 8);
        CHECK(r.at(0) == R(1));
        for (int n = 1; n <= 8; ++n)
            CHECK(r.at(n) == N.at(n) / R(2));
    }
    // stable means reproduce themselves
    for (const R& a2 : {R(-1, 4), R(1, 3), R(-1, 2)}) {
        const MeanExpansion s = expandStable(a2, 8);
        CHECK(resultantExpansion(s, s, s, 8).coeffs == s.coeffs);
    }
    // the logarithmic mean is not stable: its t^4 term moves
    const MeanExpansion L = expandLogarithmic(6);
    CHECK(resultantExpansion(L, L, L, 6).at(4) != L.at(4));
}

TEST_CASE("input checks")
{
    const MeanExpansion A = expandPowerMean(R(1), 4);
    try {
        resultantExpansion(A, A, expandPowerMean(R(1), 2), 4);
        FAIL("expected order_mismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == "order_mismatch");
    }
    MeanExpansion bad = A;
    bad.coeffs[0] = R(2);
    CHECK_THROWS_AS(resultantExpansion(A, bad, A, 4), ParameterError);
    CHECK(caseName(ResultantCase::I) == "I");
    CHECK(caseName(ResultantCase::III) == "III");
    CHECK(classifyCase(expandIndexed(1, 3)) == ResultantCase::III);
    CHECK(classifyCase(expandPowerMean(R(2), 3)) == ResultantCase::I);
}
