#include <doctest.h>

#include <cmath>

#include "asymean/error.hpp"
#include "asymean/resultant.hpp"
#include "asymean/stability.hpp"
#include "generators.hpp"

using namespace asymean;

namespace {

using R = Rational;

StabilizabilityVerdict verdictFor(const char* name, int maxOrder = 6)
{
    return optimalParameters(parseMeanSpec(name), maxOrder);
}

bool hasExactSolution(const StabilizabilityVerdict& v, const R& p, const R& q)
{
    for (const auto& s : v.solutions)
        if (s.p.kind == RootDescription::Kind::ExactRational && s.p.value == p && s.q.value == q)
            return true;
    return false;
}

} // namespace

TEST_CASE("difference expansion is M minus the resultant")
{
    testgen::Gen g(30);
    for (int i = 0; i < 15; ++i) {
        const MeanExpansion M = g.expansion(6, i % 2 == 0);
        const R p = g.rational(), q = g.rational();
        const DifferenceExpansion d = differenceExpansion(M, p, q, 6);
        const MeanExpansion r = resultantPowerMeans(p, q, M, 6);
        for (int n = 0; n <= 6; ++n)
            CHECK(d.coeffs[n] == M.at(n) - r.at(n));
        CHECK(d.coeffs[2] == (R(6) * M.at(2) - p - R(2) * q + R(3)) / R(8));
    }
    const DifferenceExpansion zero = differenceExpansion(expandPowerMean(R(1), 6), R(1), R(1), 6);
    CHECK_FALSE(zero.firstNonzero.has_value());
    CHECK(zero.sign == AsymptoticSign::Zero);
}

TEST_CASE("fourth-order difference coefficients")
{
    testgen::Gen g(31);
    for (int i = 0; i < 15; ++i) {
        const R p = g.rational(), q = g.rational();
        const R m2 = differenceExpansion(expandIndexed(2, 4), p, q, 4).coeffs[4];
        CHECK(m2 == (R(2) * p.pow(3) - R(3) * p * p + R(2) * p * (R(14) * q - R(9))
                     + R(4) * q * (R(4) * (q - R(2)) * q - R(9)) - R(45)) / R(384));
        const R lg = differenceExpansion(expandLogarithmic(4), p, q, 4).coeffs[4];
        CHECK(lg == (R(2) * p.pow(3) - R(3) * p * p - R(2) * p * (R(5) + R(2) * q)
                     + R(4) * q * (R(4) * q * (q - R(1)) - R(5)) + R(11)) / R(384));
        // on the locus of the logarithmic mean, p = 1 - 2q
        const R onLocus = differenceExpansion(expandLogarithmic(4), R(1) - R(2) * q, q, 4).coeffs[4];
        CHECK(onLocus == q * (q - R(1)) / R(96));
    }
}

TEST_CASE("first-order locus")
{
    testgen::Gen g(32);
    for (int i = 0; i < 20; ++i) {
        const MeanExpansion M = g.expansion(4, true);
        const AffineMap locus = firstOrderLocus(M);
        CHECK(locus.slope == R(-1, 2));
        CHECK(locus.intercept == (R(3) + R(6) * M.at(2)) / R(2));
        const R p = g.rational();
        CHECK(differenceExpansion(M, p, locus(p), 4).coeffs[2].isZero());
    }
    try {
        firstOrderLocus(expandIndexed(1, 4));
        FAIL("expected parameter_independent");
    } catch (const Error& e) {
        CHECK(e.kind() == "parameter_independent");
    }
}

TEST_CASE("coefficient polynomials along the locus")
{
    const MeanExpansion M2 = expandIndexed(2, 6);
    const AffineMap l2 = firstOrderLocus(M2);
    CHECK(l2.intercept == R(5, 2));
    CHECK(coefficientPolynomial(M2, 4, l2) == Polynomial({R(-85, 384), R(0), R(5, 384)}));
    CHECK(coefficientPolynomial(M2, 4, l2, R(7)) == coefficientPolynomial(M2, 4, l2));

    testgen::Gen g(33);
    for (int i = 0; i < 10; ++i) {
        const R a = g.unitRational();
        const MeanExpansion L = expandLAlpha(a, 6);
        const AffineMap locus = firstOrderLocus(L);
        const R a2 = a * a;
        const Polynomial c4 = coefficientPolynomial(L, 4, locus);
        const R k = R(-1, 384) * (R(4) * a2 - R(1));
        CHECK(c4 == Polynomial({k * (R(-1) - R(16) * a2 + R(16) * a2 * a2), R(0), k}));
    }
}

TEST_CASE("solver on even means")
{
    SUBCASE("M2")
    {
        const auto v = verdictFor("M2");
        REQUIRE(v.solutions.size() == 2);
        CHECK(v.relation == Relation::CandidateSuper);
        for (const auto& s : v.solutions) {
            CHECK(s.p.kind == RootDescription::Kind::QuadraticSurd);
            CHECK(std::fabs(s.p.approx()) == doctest::Approx(std::sqrt(17.0)));
            CHECK(s.q.approx() == doctest::Approx(-s.p.approx() / 2 + 2.5));
            REQUIRE(s.leading.has_value());
            CHECK(s.achievedOrder == 6);
            CHECK(s.leading->exact.isRational());
            CHECK(s.leading->exact.u == R(-11, 180));
        }
    }
    SUBCASE("M4")
    {
        const auto v = verdictFor("M4");
        REQUIRE(v.solutions.size() == 2);
        for (const auto& s : v.solutions) {
            CHECK(std::fabs(s.p.approx()) == doctest::Approx(std::sqrt(21.0)));
            REQUIRE(s.leading.has_value());
            CHECK(s.leading->exact.u == R(13, 320));
        }
    }
    SUBCASE("L-alpha at 1/3")
    {
        const auto v = verdictFor("Lalpha(1/3)");
        REQUIRE(v.solutions.size() == 2);
        for (const auto& s : v.solutions) {
            CHECK(std::fabs(s.p.approx()) == doctest::Approx(std::sqrt(209.0) / 9));
            REQUIRE(s.leading.has_value());
            CHECK(s.leading->exact.u == R(-25, 1062882));
            // closed form of the leading t^6 coefficient at the optimum
            const R a(1, 3), a2 = a * a;
            const R t = R(4) * a2 - R(1);
            CHECK(s.leading->exact.u == R(-1, 720) * a2 * (a2 - R(1)) * t * t * t);
        }
    }
    SUBCASE("S-alpha at 1/3")
    {
        const auto v = verdictFor("Salpha(1/3)");
        REQUIRE(v.solutions.size() == 2);
        const R a(1, 3), a2 = a * a;
        const R p2 = (R(1) - R(12) * a2 + R(112) * a2 * a2 - R(64) * a2.pow(3)) / (R(1) + R(4) * a2);
        const R inner = R(1) - R(16) * a2 + R(16) * a2 * a2;
        const R lead = R(1, 720) * a2 * (R(1) + a2) * inner * inner / (R(1) + R(4) * a2);
        for (const auto& s : v.solutions) {
            CHECK(s.p.approx() * s.p.approx() == doctest::Approx(p2.toDouble()));
            REQUIRE(s.leading.has_value());
            CHECK(s.leading->exact.u == lead);
        }
        CHECK(lead == R(2209, 55269864));
    }
}

TEST_CASE("stabilizable means")
{
    const auto L = verdictFor("L");
    CHECK(L.relation == Relation::Stabilizable);
    CHECK(hasExactSolution(L, R(-1), R(1)));
    CHECK(hasExactSolution(L, R(1), R(0)));

    const auto l1 = verdictFor("Lalpha(1)");
    CHECK(l1.relation == Relation::Stabilizable);
    CHECK(hasExactSolution(l1, R(1), R(-2)));
    CHECK(hasExactSolution(l1, R(-1), R(-1)));

    const auto half = verdictFor("Lalpha(1/2)");
    CHECK(half.familyStabilizes);
    REQUIRE(half.locus.has_value());
    CHECK(half.locus->slope == R(-1, 2));
    CHECK(half.locus->intercept.isZero());
}

TEST_CASE("means with a nonzero t coefficient")
{
    for (const char* name : {"M1", "M5"}) {
        const auto v = verdictFor(name);
        CHECK(v.parameterFree);
        CHECK(v.relation == Relation::Neither);
    }
    CHECK(verdictFor("M3").relation == Relation::CandidateSub);
    CHECK(verdictFor("Malphar(1/2,1)").relation == Relation::CandidateSuper);
    CHECK(verdictFor("Malphar(-1/2,1)").relation == Relation::Neither);
    // without a numeric model the verdict follows the asymptotic sign alone
    const auto bare = optimalParameters(expandIndexed(1, 6), 6);
    CHECK(bare.parameterFree);
    CHECK(bare.relation == Relation::CandidateSub);
}

TEST_CASE("stability of means")
{
    testgen::Gen g(34);
    for (int i = 0; i < 10; ++i) {
        const R p = g.rational(5, 4);
        const StabilityReport r = isStable(expandPowerMean(p, 12));
        CHECK(r.stable);
        CHECK_FALSE(r.mismatchIndex.has_value());
    }
    const StabilityReport log = isStable(parseMeanSpec("L"), 8);
    CHECK_FALSE(log.stable);
    REQUIRE(log.mismatchIndex.has_value());
    CHECK(*log.mismatchIndex == 4);
    CHECK_FALSE(log.defect.isZero());
    CHECK(isStable(parseMeanSpec("Lalpha(1/2)"), 10).stable);
    CHECK(isStable(parseMeanSpec("Lalpha(-1)"), 10).stable);
    CHECK_THROWS(isStable(parseMeanSpec("A"), 3));
}

TEST_CASE("stability scans over the one-parameter families")
{
    const auto l = stabilityParameterScan(StabilityFamily::LAlpha, 8);
    REQUIRE(l.size() == 4);
    const std::vector<R> expected = {R(-1), R(-1, 2), R(1, 2), R(1)};
    for (std::size_t i = 0; i < l.size(); ++i) {
        CHECK(l[i].kind == RootDescription::Kind::ExactRational);
        CHECK(l[i].value == expected[i]);
    }
    CHECK(stabilityParameterScan(StabilityFamily::SAlpha, 8).empty());
}

TEST_CASE("names")
{
    CHECK(relationName(Relation::CandidateSub) == "candidate-sub");
    CHECK(relationName(Relation::Stabilizable) == "stabilizable");
    CHECK(signName(AsymptoticSign::Negative) == "negative");
    CHECK(AffineMap{R(-1, 2), R(5, 2)}(R(1)) == R(2));
}
