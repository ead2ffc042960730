#include <type_traits>

#include "asymean/error.hpp"
#include "asymean/means.hpp"

namespace asymean {

namespace {

// a_{2n} = e_n for an expansion in t^2 x^{-2}, odd slots zero.
MeanExpansion spreadEven(const Series& e, int N)
{
    Series a(N);
    for (int n = 0; 2 * n <= N; ++n)
        a[2 * n] = e.at(n);
    return MeanExpansion{a, Parity::EvenOnly};
}

void requireAlpha(const Rational& alpha, const char* who)
{
    if (alpha.abs() > Rational(1))
        throw ParameterError(std::string(who) + " requires |alpha| <= 1, got " + alpha.toString());
}

// ln((x+t)/(x-t)) = 2 artanh(u) = 2 sum u^(2k+1)/(2k+1), u = t/x.
Series logRatioSeries(int N)
{
    Series s(N);
    for (int k = 0; 2 * k + 1 <= N; ++k)
        s[2 * k + 1] = Rational(2, 2 * k + 1);
    return s;
}

Series arctanSeries(int N)
{
    Series s(N);
    for (int k = 0; 2 * k + 1 <= N; ++k)
        s[2 * k + 1] = Rational(k % 2 ? -1 : 1, 2 * k + 1);
    return s;
}

// ln(1 + c y)
Series log1pSeries(const Rational& c, int N)
{
    Series s(N);
    for (int j = 1; j <= N; ++j)
        s[j] = Rational(j % 2 ? 1 : -1, j) * c.pow(j);
    return s;
}

// With Lambda = ln(b/a) and |b - a| = 2t, a mean of the form
// 2t / psi(Lambda) has M(x-t, x+t)/x = 2 / (psi(Lambda(u))/u).
MeanExpansion fromDenominator(const Series& psi, int N)
{
    const Series composed = compose(psi, logRatioSeries(N + 1), N + 1);
    const Series quotient = shiftDown(composed, 1);
    return makeExpansion(power(quotient, Rational(-1), N) * Rational(2));
}

} // namespace

Parity classifyParity(const Series& coeffs)
{
    for (int n = 1; n <= coeffs.order(); n += 2)
        if (!coeffs[n].isZero())
            return Parity::Mixed;
    return Parity::EvenOnly;
}

MeanExpansion makeExpansion(Series coeffs)
{
    const Parity parity = classifyParity(coeffs);
    return MeanExpansion{std::move(coeffs), parity};
}

MeanExpansion expandPowerMean(const Rational& p, int N)
{
    const Series oneMinus({Rational(1), Rational(-1)}, N);
    const Series onePlus({Rational(1), Rational(1)}, N);
    if (p.isZero()) {
        const Series oneMinusSq({Rational(1), Rational(0), Rational(-1)}, N);
        return makeExpansion(power(oneMinusSq, Rational(1, 2), N));
    }
    const Series avg = (power(oneMinus, p, N) + power(onePlus, p, N)) * Rational(1, 2);
    return makeExpansion(power(avg, p.reciprocal(), N));
}

MeanExpansion expandLAlpha(const Rational& alpha, int N)
{
    requireAlpha(alpha, "Lalpha");
    if (alpha.isZero())
        return expandLogarithmic(N);
    const int K = N / 2;
    // L_alpha(x-t, x+t) = 2 alpha x (1 - u^2)^alpha / sum_i C(2alpha, 2i+1) u^(2i)  (u = t/x, in u^2)
    Series odd(K);
    Series diag(K);
    for (int i = 0; i <= K; ++i) {
        odd[i] = binomial(Rational(2) * alpha, static_cast<unsigned>(2 * i + 1));
        diag[i] = binomial(alpha, static_cast<unsigned>(i)) * Rational(i % 2 ? -1 : 1);
    }
    const Series e = multiply(diag, power(odd, Rational(-1), K), K) * (Rational(2) * alpha);
    return spreadEven(e, N);
}

MeanExpansion expandSAlpha(const Rational& alpha, int N)
{
    requireAlpha(alpha, "Salpha");
    if (alpha.isZero())
        return expandLogarithmic(N);
    const int K = N / 2;
    Series even(K), odd(K);
    for (int i = 0; i <= K; ++i) {
        even[i] = binomial(alpha, static_cast<unsigned>(2 * i));
        odd[i] = binomial(alpha, static_cast<unsigned>(2 * i + 1));
    }
    // C: argument of arctan divided by u, in powers of u^2
    const Series C = multiply(odd, power(even, Rational(-1), K), K);
    // D: arctan(u C) / u
    Series D(K);
    for (int m = 0; m <= K; ++m) {
        const Series Cp = power(C, Rational(2 * m + 1), K - m);
        const Rational w(m % 2 ? -1 : 1, 2 * m + 1);
        for (int n = m; n <= K; ++n)
            D[n] += w * Cp[n - m];
    }
    return spreadEven(power(D, Rational(-1), K) * alpha, N);
}

MeanExpansion expandMuGenerated(const Series& c, int N)
{
    if (c.at(0) != Rational(1))
        throw ParameterError("mu-generated mean requires c_0 = 1");
    const int K = N / 2;
    Series w(K);
    for (int i = 0; i <= K; ++i)
        w[i] = Rational(1, 2 * i + 1);
    Series E(K);
    for (int n = 0; n <= K; ++n) {
        const Rational cn = c.at(n);
        if (cn.isZero())
            continue;
        const Series wp = power(w, Rational(2 * n + 1), K - n);
        const Rational scale = cn * Rational(4).pow(n);
        for (int m = n; m <= K; ++m)
            E[m] += scale * wp[m - n];
    }
    return spreadEven(power(E, Rational(-1), K), N);
}

MeanExpansion expandLogarithmic(int N)
{
    return expandMuGenerated(Series({Rational(1)}, 0), N);
}

MeanExpansion expandIndexed(int which, int N)
{
    const int P = N + 1;
    Series psi(P);
    switch (which) {
    case 1: // ln(1 + L)
        psi = log1pSeries(Rational(1), P);
        break;
    case 2: // sqrt2 arctan(L / sqrt2)
        for (int k = 0; 2 * k + 1 <= P; ++k)
            psi[2 * k + 1] = Rational(k % 2 ? -1 : 1, 2 * k + 1) / Rational(2).pow(k);
        break;
    case 3: { // 2 arctan(1 + L) - pi/2 = 2 arctan(L / (2 + L))
        Series w(P);
        for (int j = 1; j <= P; ++j)
            w[j] = Rational(j % 2 ? 1 : -1) / Rational(2).pow(j);
        psi = compose(arctanSeries(P), w, P) * Rational(2);
        break;
    }
    case 4: // sqrt2 asinh(L / sqrt2), psi' = (1 + L^2/2)^(-1/2)
        psi = integrate(power(Series({Rational(1), Rational(0), Rational(1, 2)}, P), Rational(-1, 2), P), P);
        break;
    case 5: // sqrt2 (asinh(1 + L) - asinh 1), psi' = (1 + L + L^2/2)^(-1/2)
        psi = integrate(power(Series({Rational(1), Rational(1), Rational(1, 2)}, P), Rational(-1, 2), P), P);
        break;
    default:
        throw ParameterError("indexed mean must be M1..M5");
    }
    return fromDenominator(psi, N);
}

MeanExpansion expandMAlphaR(const Rational& alpha, const Rational& r, int N)
{
    requireAlpha(alpha, "Malphar");
    if (r.sign() <= 0)
        throw ParameterError("Malphar requires r > 0, got " + r.toString());
    const int P = N + 1;
    const Rational sum = r + alpha;
    Series psi(P);
    if (sum.isZero()) {
        // ln(1 + r L) / r
        psi = log1pSeries(r, P) * r.reciprocal();
    } else {
        // ((1 + r L)^((r+alpha)/r) - 1) / (r + alpha)
        psi = power(Series({Rational(1), r}, P), sum / r, P);
        psi[0] -= Rational(1);
        psi *= sum.reciprocal();
    }
    return fromDenominator(psi, N);
}

MeanExpansion expand(const MeanSpec& spec, int N)
{
    validate(spec);
    return std::visit([N](const auto& m) -> MeanExpansion {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, PowerMean>)
            return expandPowerMean(m.p, N);
        else if constexpr (std::is_same_v<T, LAlphaMean>)
            return expandLAlpha(m.alpha, N);
        else if constexpr (std::is_same_v<T, SAlphaMean>)
            return expandSAlpha(m.alpha, N);
        else if constexpr (std::is_same_v<T, IndexedMean>)
            return expandIndexed(m.which, N);
        else if constexpr (std::is_same_v<T, MAlphaRMean>)
            return expandMAlphaR(m.alpha, m.r, N);
        else
            return expandMuGenerated(m.c, N);
    }, spec);
}

} // namespace asymean
