#include "asymean/resultant.hpp"

#include <limits>
#include <vector>

#include "asymean/error.hpp"

namespace asymean {

namespace {

constexpr int kNoShift = std::numeric_limits<int>::max();

// Powers 0..maxPower of a sequence G(u).  When G = u^shift * G~(u), the
// stored powers are those of G~ and power n sits n*shift places higher.
struct PowerTable
{
    int shift = 0;
    std::vector<Series> powers;

    int offset(int n) const
    {
        if (n == 0)
            return 0;
        if (shift == kNoShift)
            return kNoShift;
        return n * shift;
    }
};

PowerTable nonnegativePowers(const Series& seq, int maxPower, int order, PowerRoute route)
{
    PowerTable table;
    if (route == PowerRoute::Multiplicative) {
        for (int n = 0; n <= maxPower; ++n)
            table.powers.push_back(integerPower(seq, static_cast<unsigned>(n), order));
        return table;
    }
    const int v = seq.valuation();
    if (v < 0) {
        // identically zero: only the zeroth power survives
        table.shift = kNoShift;
        table.powers.push_back(Series({Rational(1)}, order));
        return table;
    }
    table.shift = v;
    const Series reduced = shiftDown(seq, v);
    for (int n = 0; n <= maxPower; ++n)
        table.powers.push_back(power(reduced, Rational(n), order));
    return table;
}

// P[., 1-n, seq] for n = 0..maxPower; seq must start with a nonzero entry.
std::vector<Series> oneMinusPowers(const Series& seq, int maxPower, int order, PowerRoute route)
{
    std::vector<Series> out;
    if (route == PowerRoute::Recursive) {
        for (int n = 0; n <= maxPower; ++n)
            out.push_back(power(seq, Rational(1 - n), order));
        return out;
    }
    const Series inv = power(seq, Rational(-1), order);
    for (int n = 0; n <= maxPower; ++n)
        out.push_back(n == 0 ? seq.truncated(order) : integerPower(inv, static_cast<unsigned>(n - 1), order));
    return out;
}

// sum_n a_n * (T/x)^n-shaped composition:
//   out_m = sum_n a_n sum_k G^n[k] H^(1-n)[m - offset(n) - n - k]
Series composeHalf(const MeanExpansion& outer, const PowerTable& g, const std::vector<Series>& h, int order)
{
    Series out(order);
    for (int n = 0; n <= order; ++n) {
        const Rational an = outer.at(n);
        if (an.isZero())
            continue;
        const int off = g.offset(n);
        if (off == kNoShift || off + n > order)
            continue;
        const Series& gp = g.powers[static_cast<std::size_t>(n)];
        const Series& hp = h[static_cast<std::size_t>(n)];
        for (int m = off + n; m <= order; ++m) {
            Rational acc(0);
            const int span = m - off - n;
            for (int k = 0; k <= span; ++k)
                acc += gp.at(k) * hp.at(span - k);
            out[m] += an * acc;
        }
    }
    return out;
}

} // namespace

std::string caseName(ResultantCase c)
{
    switch (c) {
    case ResultantCase::I: return "I";
    case ResultantCase::II: return "II";
    case ResultantCase::III: return "III";
    }
    return "";
}

ResultantCase classifyCase(const MeanExpansion& N)
{
    const Rational a1 = N.at(1);
    if (a1 == Rational(-1))
        return ResultantCase::II;
    if (a1 == Rational(1))
        return ResultantCase::III;
    return ResultantCase::I;
}

MeanExpansion resultantExpansion(const MeanExpansion& K, const MeanExpansion& M,
                                 const MeanExpansion& N, int order, PowerRoute route)
{
    if (order < 0)
        throw ParameterError("resultant order must be nonnegative");
    if (K.order() < order || M.order() < order || N.order() < order)
        throw Error("order_mismatch", "resultant: input expansions are truncated below order "
                                          + std::to_string(order));
    for (const auto* e : {&K, &M, &N})
        if (e->at(0) != Rational(1))
            throw ParameterError("resultant: expansions must start with a_0 = 1");

    const Rational a1N = N.at(1);
    // M(x-t, N):  T = t/2 * g(u),  X = x/2 * h(u)
    // M(N, x+t):  T = t/2 * gt(u), X = x/2 * ht(u)
    Series g(order), h(order), gt(order), ht(order);
    g[0] = Rational(1) + a1N;
    gt[0] = Rational(1) - a1N;
    h[0] = ht[0] = Rational(2);
    if (order >= 1) {
        h[1] = a1N - Rational(1);
        ht[1] = a1N + Rational(1);
    }
    for (int j = 1; j <= order; ++j) {
        if (j + 1 <= order) {
            g[j] = N.at(j + 1);
            gt[j] = -N.at(j + 1);
        }
        if (j >= 2) {
            h[j] = N.at(j);
            ht[j] = N.at(j);
        }
    }

    const PowerTable gPow = nonnegativePowers(g, order, order, route);
    const PowerTable gtPow = nonnegativePowers(gt, order, order, route);
    const auto hPow = oneMinusPowers(h, order, order, route);
    const auto htPow = oneMinusPowers(ht, order, order, route);

    const Series left = composeHalf(M, gPow, hPow, order);
    const Series right = composeHalf(M, gtPow, htPow, order);

    // K(X - T, X + T) with T = t/4 * d(u), X = x/4 * s(u)
    const int dOrder = order > 0 ? order - 1 : 0;
    Series d(dOrder);
    for (int m = 1; m <= order; ++m)
        d[m - 1] = right[m] - left[m];
    const Series s = right + left;

    const PowerTable dPow = nonnegativePowers(d, order, dOrder, route);
    const auto sPow = oneMinusPowers(s, order, order, route);
    Series r = composeHalf(K, dPow, sPow, order);
    r *= Rational(1, 4);
    return makeExpansion(std::move(r));
}

MeanExpansion resultantPowerMeans(const Rational& p, const Rational& q,
                                  const MeanExpansion& M, int order)
{
    return resultantExpansion(expandPowerMean(p, order), M, expandPowerMean(q, order), order);
}

} // namespace asymean
