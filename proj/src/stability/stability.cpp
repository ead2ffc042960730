#include "asymean/stability.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "asymean/error.hpp"
#include "asymean/resultant.hpp"

namespace asymean {

namespace {

// Below this width an undecided interval sign is reported as undetermined.
const Rational kSignWidth = Rational(1, 1) / Rational(mpz_class("1000000000000000000000000000000"));

// Parameters used to probe boundary behaviour when no isolated optimum exists.
const std::vector<Rational> kProbeParams = {Rational(1, 2), Rational(1), Rational(2), Rational(3)};

Series differenceCoeffs(const MeanExpansion& M, const Rational& p, const Rational& q, int order)
{
    const MeanExpansion r = resultantPowerMeans(p, q, M, order);
    return M.coeffs.truncated(order) - r.coeffs;
}

AsymptoticSign toSign(int s)
{
    return s > 0 ? AsymptoticSign::Positive : s < 0 ? AsymptoticSign::Negative : AsymptoticSign::Zero;
}

// All coefficient polynomials 0..maxIndex along the locus from one sample set.
std::vector<Polynomial> coefficientPolynomials(const MeanExpansion& M, int maxIndex, const AffineMap& locus,
                                               const Rational& shift)
{
    const int samples = maxIndex + 2;
    std::vector<Rational> ps;
    std::vector<Series> diffs;
    for (int i = 0; i < samples; ++i) {
        const Rational p = shift + Rational(i);
        ps.push_back(p);
        diffs.push_back(differenceCoeffs(M, p, locus(p), maxIndex));
    }
    std::vector<Polynomial> out;
    for (int k = 0; k <= maxIndex; ++k) {
        std::vector<std::pair<Rational, Rational>> pts;
        for (int i = 0; i < samples; ++i)
            pts.emplace_back(ps[static_cast<std::size_t>(i)], diffs[static_cast<std::size_t>(i)][k]);
        Polynomial poly = lagrangeInterpolate(pts);
        if (poly.degree() > std::max(k - 1, 0))
            throw Error("degree_bound", "degree bound violated at t^" + std::to_string(k));
        out.push_back(std::move(poly));
    }
    return out;
}

std::pair<Rational, Rational> intervalEval(const Polynomial& f, const Rational& lo, const Rational& hi)
{
    if (f.isZero())
        return {Rational(0), Rational(0)};
    Rational rlo = f.leading(), rhi = f.leading();
    for (int i = f.degree() - 1; i >= 0; --i) {
        const Rational c[4] = {rlo * lo, rlo * hi, rhi * lo, rhi * hi};
        rlo = *std::min_element(c, c + 4) + f.coeff(i);
        rhi = *std::max_element(c, c + 4) + f.coeff(i);
    }
    return {rlo, rhi};
}

// f at a root: exact in Q(sqrt b) for rational and quadratic roots, a
// sign-certified enclosure otherwise.
LeadingCoefficient evaluateAt(const Polynomial& f, const RootDescription& root)
{
    LeadingCoefficient out;
    switch (root.kind) {
    case RootDescription::Kind::ExactRational: {
        out.exact = QuadraticValue{f(root.value), Rational(0), Rational(0)};
        out.sign = out.exact.sign();
        return out;
    }
    case RootDescription::Kind::QuadraticSurd: {
        const QuadraticSurd& s = root.surd;
        const Polynomial rem = f.isZero() ? f : f.divmod(s.minimalPolynomial()).second;
        const Rational r0 = rem.coeff(0);
        const Rational r1 = rem.coeff(1);
        out.exact = QuadraticValue{r0 + r1 * s.a / s.c, r1 * Rational(s.sign) / s.c, s.b};
        out.sign = out.exact.sign();
        return out;
    }
    case RootDescription::Kind::IsolatedInterval:
        break;
    }
    out.kind = LeadingCoefficient::Kind::Interval;
    if (f.isZero()) {
        out.lo = out.hi = Rational(0);
        return out;
    }
    Rational lo = root.lo, hi = root.hi;
    const Polynomial g = gcd(f, root.defining);
    if (g.degree() >= 1 && g.signAt(lo) * g.signAt(hi) < 0) {
        out.lo = out.hi = Rational(0);
        return out;
    }
    while (true) {
        auto [vlo, vhi] = intervalEval(f, lo, hi);
        out.lo = vlo;
        out.hi = vhi;
        if (vlo.sign() > 0 || vhi.sign() < 0) {
            out.sign = vlo.sign() > 0 ? 1 : -1;
            return out;
        }
        if (hi - lo < kSignWidth)
            return out;   // sign undetermined at this width
        refineInterval(root.defining, lo, hi, (hi - lo) / Rational(4));
    }
}

bool isZeroAt(const Polynomial& f, const RootDescription& root)
{
    if (f.isZero())
        return true;
    const LeadingCoefficient v = evaluateAt(f, root);
    if (v.kind == LeadingCoefficient::Kind::Exact)
        return v.exact.sign() == 0 && v.exact.u.isZero() && v.exact.v.isZero();
    return v.lo.isZero() && v.hi.isZero();
}

// f(a x + b)
Polynomial composeLinear(const Polynomial& f, const Rational& a, const Rational& b)
{
    const Polynomial lin({b, a});
    Polynomial out;
    for (int i = f.degree(); i >= 0; --i)
        out = out * lin + Polynomial::constant(f.coeff(i));
    return out;
}

RootDescription mapThroughLocus(const RootDescription& p, const AffineMap& locus)
{
    if (locus.slope.isZero())
        return RootDescription::exact(locus.intercept);
    switch (p.kind) {
    case RootDescription::Kind::ExactRational:
        return RootDescription::exact(locus(p.value));
    case RootDescription::Kind::QuadraticSurd:
        return RootDescription::quadratic(p.surd.affine(locus.slope, locus.intercept));
    case RootDescription::Kind::IsolatedInterval: {
        Rational lo = locus(p.lo), hi = locus(p.hi);
        if (hi < lo)
            std::swap(lo, hi);
        const Rational inv = locus.slope.reciprocal();
        return RootDescription::interval(lo, hi, composeLinear(p.defining, inv, -locus.intercept * inv));
    }
    }
    return p;
}

Relation relationFromSign(int s)
{
    return s > 0 ? Relation::CandidateSub : Relation::CandidateSuper;
}

std::optional<BoundaryEvidence> boundaryEvidence(const MeanModel& m, double p, double q, int asymptoticSign)
{
    try {
        const LimitEstimate ml = boundaryLimit(m);
        const LimitEstimate rl = boundaryLimitResultant(powerMeanModel(p), m, powerMeanModel(q));
        BoundaryEvidence ev;
        ev.p = p;
        ev.q = q;
        ev.meanLimit = ml.value;
        ev.resultantLimit = rl.value;
        const bool closed = ml.method == LimitEstimate::Method::ClosedForm
                         && rl.method == LimitEstimate::Method::ClosedForm;
        ev.method = closed ? "closed-form" : "extrapolated (numeric evidence)";
        const double d = ev.meanLimit - ev.resultantLimit;
        const int boundarySign = std::abs(d) <= 1e-9 ? 0 : (d > 0 ? 1 : -1);
        ev.conflict = boundarySign != 0 && boundarySign != asymptoticSign;
        return ev;
    } catch (const Error& e) {
        if (e.kind() == "limit_not_resolved")
            return std::nullopt;
        throw;
    }
}

// Candidate relation from the sign, demoted to "neither" when every probe
// contradicts it at the boundary.
Relation probeRelation(int sign, const std::optional<MeanModel>& numeric,
                       const std::vector<std::pair<Rational, Rational>>& probes,
                       std::vector<BoundaryEvidence>& sampled)
{
    if (!numeric)
        return relationFromSign(sign);
    bool allConflict = true;
    for (const auto& [p, q] : probes) {
        auto ev = boundaryEvidence(*numeric, p.toDouble(), q.toDouble(), sign);
        if (!ev) {
            allConflict = false;
            continue;
        }
        allConflict = allConflict && ev->conflict;
        sampled.push_back(*ev);
    }
    return allConflict && !sampled.empty() ? Relation::Neither : relationFromSign(sign);
}

} // namespace

std::string signName(AsymptoticSign s)
{
    switch (s) {
    case AsymptoticSign::Positive: return "positive";
    case AsymptoticSign::Negative: return "negative";
    case AsymptoticSign::Zero: return "zero";
    }
    return "";
}

std::string relationName(Relation r)
{
    switch (r) {
    case Relation::CandidateSub: return "candidate-sub";
    case Relation::CandidateSuper: return "candidate-super";
    case Relation::Neither: return "neither";
    case Relation::Stabilizable: return "stabilizable";
    }
    return "";
}

std::string AffineMap::toString() const
{
    std::ostringstream os;
    os << "q = " << slope << "*p + " << intercept;
    return os.str();
}

double LeadingCoefficient::approx() const
{
    if (kind == Kind::Exact)
        return exact.toDouble();
    return ((lo + hi) / Rational(2)).toDouble();
}

std::string LeadingCoefficient::toString() const
{
    if (kind == Kind::Exact)
        return exact.toString();
    std::ostringstream os;
    os << "[" << lo.toDouble() << ", " << hi.toDouble() << "]";
    return os.str();
}

DifferenceExpansion differenceExpansion(const MeanExpansion& M, const Rational& p, const Rational& q, int order)
{
    DifferenceExpansion out;
    out.coeffs = differenceCoeffs(M, p, q, order);
    const int v = out.coeffs.valuation();
    if (v >= 0) {
        out.firstNonzero = v;
        out.sign = toSign(out.coeffs[v].sign());
    }
    return out;
}

AffineMap firstOrderLocus(const MeanExpansion& M)
{
    if (M.order() < 2)
        throw ParameterError("first-order locus needs an expansion through t^2");
    if (!M.at(1).isZero())
        throw Error("parameter_independent", "leading term parameter-independent");
    const auto c2 = [&](int p, int q) { return differenceCoeffs(M, Rational(p), Rational(q), 2)[2]; };
    const Rational c00 = c2(0, 0);
    const Rational cp = c2(1, 0) - c00;
    const Rational cq = c2(0, 1) - c00;
    if (c2(1, 1) != c00 + cp + cq)
        throw Error("degree_bound", "t^2 coefficient is not affine in (p, q)");
    if (cq.isZero())
        throw Error("parameter_independent", "leading term parameter-independent");
    return AffineMap{-cp / cq, -c00 / cq};
}

Polynomial coefficientPolynomial(const MeanExpansion& M, int index, const AffineMap& locus, const Rational& shift)
{
    if (index < 2)
        throw ParameterError("coefficient polynomials start at t^2");
    if (M.order() < index)
        throw Error("order_mismatch", "expansion is shorter than the requested coefficient");
    return coefficientPolynomials(M, index, locus, shift)[static_cast<std::size_t>(index)];
}

StabilizabilityVerdict optimalParameters(const MeanExpansion& M, int maxOrder, const std::optional<MeanModel>& numeric)
{
    if (maxOrder < 2)
        throw ParameterError("maxOrder must be at least 2");
    if (M.order() < maxOrder)
        throw Error("order_mismatch", "expansion is shorter than maxOrder");

    StabilizabilityVerdict v;
    v.maxOrder = maxOrder;

    if (!M.at(1).isZero()) {
        const Rational lead = differenceCoeffs(M, Rational(1), Rational(1), 1)[1];
        v.parameterFree = true;
        v.genericOrder = 1;
        v.genericLeading = Polynomial::constant(lead);
        std::vector<std::pair<Rational, Rational>> probes;
        for (const auto& p : kProbeParams)
            for (const auto& q : kProbeParams)
                probes.emplace_back(p, q);
        v.relation = probeRelation(lead.sign(), numeric, probes, v.sampledBoundary);
        return v;
    }

    const AffineMap locus = firstOrderLocus(M);
    v.locus = locus;
    const auto polys = coefficientPolynomials(M, maxOrder, locus, Rational(0));

    int k = 3;
    while (k <= maxOrder && polys[static_cast<std::size_t>(k)].isZero())
        ++k;
    if (k > maxOrder) {
        v.familyStabilizes = true;
        v.relation = Relation::Stabilizable;
        return v;
    }
    v.genericOrder = k;
    v.genericLeading = polys[static_cast<std::size_t>(k)];

    const auto roots = isolateRealRoots(v.genericLeading);
    if (roots.empty()) {
        std::vector<std::pair<Rational, Rational>> probes;
        for (const auto& p : kProbeParams)
            probes.emplace_back(p, locus(p));
        v.relation = probeRelation(v.genericLeading(Rational(0)).sign(), numeric, probes, v.sampledBoundary);
        return v;
    }

    for (const auto& root : roots) {
        OptimalSolution sol;
        sol.p = root;
        sol.q = mapThroughLocus(root, locus);
        for (int j = k + 1; j <= maxOrder; ++j) {
            const Polynomial& f = polys[static_cast<std::size_t>(j)];
            if (isZeroAt(f, root))
                continue;
            sol.achievedOrder = j;
            sol.leading = evaluateAt(f, root);
            break;
        }
        if (!sol.achievedOrder) {
            sol.relation = Relation::Stabilizable;
        } else if (sol.leading->sign == 0) {
            sol.relation = Relation::Neither;
        } else {
            sol.relation = relationFromSign(sol.leading->sign);
            if (numeric) {
                sol.boundary = boundaryEvidence(*numeric, sol.p.approx(), sol.q.approx(), sol.leading->sign);
                if (sol.boundary && sol.boundary->conflict)
                    sol.relation = Relation::Neither;
            }
        }
        v.solutions.push_back(std::move(sol));
    }

    const auto& sols = v.solutions;
    if (std::any_of(sols.begin(), sols.end(), [](const auto& s) { return s.relation == Relation::Stabilizable; })) {
        v.relation = Relation::Stabilizable;
    } else if (std::all_of(sols.begin(), sols.end(), [&](const auto& s) { return s.relation == sols[0].relation; })) {
        v.relation = sols[0].relation;
    } else {
        // disagreement: the solution reaching the highest order decides
        int best = -1;
        std::optional<Relation> rel;
        for (const auto& s : sols) {
            if (*s.achievedOrder > best) {
                best = *s.achievedOrder;
                rel = s.relation;
            } else if (*s.achievedOrder == best && rel != s.relation) {
                rel = Relation::Neither;
            }
        }
        v.relation = *rel;
    }
    return v;
}

StabilizabilityVerdict optimalParameters(const MeanSpec& spec, int maxOrder)
{
    return optimalParameters(expand(spec, maxOrder), maxOrder, model(spec));
}

StabilityReport isStable(const MeanExpansion& M)
{
    StabilityReport out;
    out.order = M.order();
    const MeanExpansion r = resultantExpansion(M, M, M, out.order);
    for (int n = 0; n <= out.order; ++n) {
        const Rational d = M.at(n) - r.at(n);
        if (!d.isZero()) {
            out.mismatchIndex = n;
            out.defect = d;
            return out;
        }
    }
    out.stable = true;
    return out;
}

StabilityReport isStable(const MeanSpec& spec, int order)
{
    if (order < 4)
        throw ParameterError("stability check needs order >= 4");
    return isStable(expand(spec, order));
}

namespace {

MeanExpansion familyExpansion(StabilityFamily family, const Rational& alpha, int order)
{
    return family == StabilityFamily::LAlpha ? expandLAlpha(alpha, order) : expandSAlpha(alpha, order);
}

// Defect a_n(M) - a_n(R(M, M, M)) as a polynomial in beta = alpha^2, with
// the degree found adaptively and confirmed by two extra samples.
Polynomial defectPolynomial(StabilityFamily family, int index)
{
    constexpr int kMaxPoints = 40;
    std::vector<std::pair<Rational, Rational>> pts;
    auto sample = [&](int i) {
        const Rational alpha(1, i + 1);
        const MeanExpansion e = familyExpansion(family, alpha, index);
        const MeanExpansion r = resultantExpansion(e, e, e, index);
        pts.emplace_back(alpha * alpha, e.at(index) - r.at(index));
    };
    for (int m = 1; m + 2 <= kMaxPoints; ++m) {
        while (static_cast<int>(pts.size()) < m + 2)
            sample(static_cast<int>(pts.size()));
        const Polynomial f = lagrangeInterpolate(std::span(pts).first(static_cast<std::size_t>(m)));
        if (f(pts[m].first) == pts[m].second && f(pts[m + 1].first) == pts[m + 1].second)
            return f;
    }
    throw Error("degree_bound", "defect polynomial did not stabilize");
}

} // namespace

std::vector<RootDescription> stabilityParameterScan(StabilityFamily family, int order)
{
    if (order < 8)
        throw ParameterError("parameter scan confirms at order >= 8");
    Polynomial common = defectPolynomial(family, 4);
    for (int idx : {6, 8})
        common = gcd(common, defectPolynomial(family, idx));

    std::vector<RootDescription> out;
    if (common.degree() < 1)
        return out;
    for (const auto& beta : isolateRealRoots(common)) {
        if (beta.kind == RootDescription::Kind::ExactRational) {
            Rational alpha;
            if (beta.value.sign() < 0 || beta.value > Rational(1) || !rationalSqrt(beta.value, alpha))
                continue;
            for (const Rational& a : {-alpha, alpha}) {
                if (!out.empty() && a.isZero())
                    continue;
                if (isStable(familyExpansion(family, a, order)).stable)
                    out.push_back(RootDescription::exact(a));
            }
            continue;
        }
        const auto [blo, bhi] = beta.enclose(defaultIsolationWidth());
        if (bhi.sign() <= 0 || blo > Rational(1))
            continue;
        // alpha = +-sqrt(beta): irrational, cannot be confirmed by an exact
        // expansion, so it is reported with the common defect as witness.
        Polynomial squared;   // common(alpha^2)
        for (int i = common.degree(); i >= 0; --i)
            squared = squared * Polynomial({Rational(0), Rational(0), Rational(1)}) + Polynomial::constant(common.coeff(i));
        const Rational lo = sqrtEnclosure(blo.sign() > 0 ? blo : Rational(0), defaultIsolationWidth()).first;
        const Rational hi = sqrtEnclosure(bhi, defaultIsolationWidth()).second;
        out.push_back(RootDescription::interval(-hi, -lo, squareFreePart(squared)));
        out.push_back(RootDescription::interval(lo, hi, squareFreePart(squared)));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.approx() < b.approx(); });
    return out;
}

} // namespace asymean
