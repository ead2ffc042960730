#include "asymean/series.hpp"

#include <algorithm>

#include "asymean/error.hpp"

namespace asymean {

Series::Series(int order) : c_(static_cast<std::size_t>(std::max(order, 0) + 1)) {}

Series::Series(std::initializer_list<Rational> coeffs, int order)
    : Series(std::vector<Rational>(coeffs), order) {}

Series::Series(std::vector<Rational> coeffs, int order) : c_(std::move(coeffs))
{
    c_.resize(static_cast<std::size_t>(std::max(order, 0) + 1));
}

Rational Series::at(int n) const
{
    if (n < 0 || n > order())
        return Rational(0);
    return c_[static_cast<std::size_t>(n)];
}

Series Series::truncated(int order) const
{
    return Series(c_, order);
}

int Series::valuation() const
{
    for (int n = 0; n <= order(); ++n)
        if (!(*this)[n].isZero())
            return n;
    return -1;
}

Series& Series::operator+=(const Series& o)
{
    const int n = std::min(order(), o.order());
    for (int i = 0; i <= n; ++i)
        (*this)[i] += o[i];
    return *this;
}

Series& Series::operator-=(const Series& o)
{
    const int n = std::min(order(), o.order());
    for (int i = 0; i <= n; ++i)
        (*this)[i] -= o[i];
    return *this;
}

Series& Series::operator*=(const Rational& s)
{
    for (auto& c : c_)
        c *= s;
    return *this;
}

Series Series::operator-() const
{
    Series r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

Series multiply(const Series& a, const Series& b, int N)
{
    Series c(N);
    const int na = std::min(a.order(), N);
    for (int i = 0; i <= na; ++i) {
        if (a[i].isZero())
            continue;
        const int nb = std::min(b.order(), N - i);
        for (int j = 0; j <= nb; ++j)
            c[i + j] += a[i] * b[j];
    }
    return c;
}

Series power(const Series& a, const Rational& r, int N)
{
    const Rational a0 = a.at(0);
    if (a0.isZero())
        throw Error("zero_constant_term", "series power: zero constant term");
    Series p(N);
    if (r.isInteger()) {
        p[0] = a0.pow(r.num().get_si());
    } else {
        if (a0 != Rational(1))
            throw Error("irrational_leading_power",
                        "series power: irrational leading power (non-integer exponent needs a_0 = 1)");
        p[0] = Rational(1);
    }
    const Rational onePlusR = Rational(1) + r;
    for (int n = 1; n <= N; ++n) {
        Rational acc(0);
        const int top = std::min(n, a.order());
        for (int k = 1; k <= top; ++k) {
            if (a[k].isZero())
                continue;
            acc += (Rational(k) * onePlusR - Rational(n)) * a[k] * p[n - k];
        }
        p[n] = acc / (Rational(n) * a0);
    }
    return p;
}

Series integerPower(const Series& a, unsigned n, int N)
{
    Series result(N);
    result[0] = Rational(1);
    Series base = a.truncated(N);
    while (n) {
        if (n & 1u)
            result = multiply(result, base, N);
        n >>= 1;
        if (n)
            base = multiply(base, base, N);
    }
    return result;
}

Series compose(const Series& outer, const Series& inner, int N)
{
    if (!inner.at(0).isZero())
        throw Error("positive_valuation", "series compose: composition requires positive valuation");
    // Horner in the outer coefficients: (((c_K) g + c_{K-1}) g + ...) + c_0.
    const int K = std::min(outer.order(), N);
    Series acc(N);
    for (int k = K; k >= 0; --k) {
        acc = multiply(acc, inner, N);
        acc[0] += outer.at(k);
    }
    return acc;
}

Series integrate(const Series& a, int N)
{
    Series b(N);
    for (int n = 1; n <= N; ++n)
        b[n] = a.at(n - 1) / Rational(n);
    return b;
}

Series derivative(const Series& a)
{
    Series d(std::max(a.order() - 1, 0));
    for (int n = 1; n <= a.order(); ++n)
        d[n - 1] = a[n] * Rational(n);
    return d;
}

Series shiftUp(const Series& a, int shift, int N)
{
    Series out(N);
    for (int n = shift; n <= N; ++n)
        out[n] = a.at(n - shift);
    return out;
}

Series shiftDown(const Series& a, int shift)
{
    for (int n = 0; n < shift && n <= a.order(); ++n)
        if (!a[n].isZero())
            throw Error("internal", "shiftDown would discard a nonzero coefficient");
    Series out(std::max(a.order() - shift, 0));
    for (int n = shift; n <= a.order(); ++n)
        out[n - shift] = a[n];
    return out;
}

} // namespace asymean
