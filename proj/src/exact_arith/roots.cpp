#include "asymean/roots.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "asymean/error.hpp"

namespace asymean {

namespace {

Rational half(const Rational& x) { return x / Rational(2); }

mpz_class roundNearest(const Rational& x)
{
    return (x + Rational(1, 2)).floor();
}

// Writes n = k^2 * m, pulling out square factors of primes below a small bound.
void extractSquare(const mpz_class& n, mpz_class& k, mpz_class& m)
{
    k = 1;
    m = n;
    for (unsigned long p = 2; p < 100000; p += (p == 2 ? 1 : 2)) {
        const mpz_class pp = mpz_class(p) * p;
        if (pp > m)
            break;
        while (mpz_divisible_p(m.get_mpz_t(), pp.get_mpz_t())) {
            m /= pp;
            k *= p;
        }
    }
}

QuadraticSurd normalizedSurd(Rational a, const Rational& b, Rational c, int sign)
{
    if (c.sign() < 0) {
        a = -a;
        c = -c;
        sign = -sign;
    }
    // sqrt(N/D) = sqrt(N*D)/D = k*sqrt(m)/D
    mpz_class k, m;
    extractSquare(b.num() * b.den(), k, m);
    const Rational scale(k, b.den());
    return QuadraticSurd{a / scale, Rational(m), c / scale, sign};
}

// Surds for the two real roots of A x^2 + B x + C, smaller root first.
std::pair<QuadraticSurd, QuadraticSurd> quadraticRoots(const Polynomial& g)
{
    const Rational A = g.coeff(2), B = g.coeff(1), C = g.coeff(0);
    const Rational disc = B * B - Rational(4) * A * C;
    QuadraticSurd minus = normalizedSurd(-B, disc, Rational(2) * A, -1);
    QuadraticSurd plus = normalizedSurd(-B, disc, Rational(2) * A, 1);
    if (minus.sign > plus.sign)
        std::swap(minus, plus);
    return {minus, plus};
}

// (1+x)^n f((lo + hi x)/(1+x)): roots of f in (lo, hi) map to roots in (0, inf).
std::vector<Rational> descartesTransform(const Polynomial& f, const Rational& lo, const Rational& hi)
{
    const int n = f.degree();
    const Polynomial lin({lo, hi});
    const Polynomial onePlus({Rational(1), Rational(1)});
    std::vector<Polynomial> linPow{Polynomial::constant(Rational(1))};
    std::vector<Polynomial> onePow{Polynomial::constant(Rational(1))};
    for (int i = 1; i <= n; ++i) {
        linPow.push_back(linPow.back() * lin);
        onePow.push_back(onePow.back() * onePlus);
    }
    Polynomial acc;
    for (int i = 0; i <= n; ++i) {
        const Rational& a = f.coeffs()[static_cast<std::size_t>(i)];
        if (!a.isZero())
            acc += linPow[static_cast<std::size_t>(i)] * onePow[static_cast<std::size_t>(n - i)] * a;
    }
    return acc.coeffs();
}

struct Isolated
{
    bool exact = false;
    Rational value;
    Rational lo, hi;
};

// Isolates the real roots of a square-free polynomial, left to right.
std::vector<Isolated> descartesIsolate(const Polynomial& f)
{
    Rational bound(0);
    for (int i = 0; i < f.degree(); ++i)
        bound = std::max(bound, (f.coeff(i) / f.leading()).abs());
    const Rational B(mpz_class(bound.floor() + 2));

    std::vector<Isolated> out;
    // Depth-first with the left half processed first keeps the output sorted.
    std::vector<std::pair<Rational, Rational>> stack{{-B, B}};
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        if (lo == hi) {
            out.push_back({true, lo, {}, {}});
            continue;
        }
        const int v = signVariations(descartesTransform(f, lo, hi));
        if (v == 0)
            continue;
        if (v == 1) {
            out.push_back({false, Rational(), lo, hi});
            continue;
        }
        const Rational mid = half(lo + hi);
        stack.emplace_back(mid, hi);
        if (f(mid).isZero())
            stack.emplace_back(mid, mid); // exact root, emitted between the halves
        stack.emplace_back(lo, mid);
    }
    return out;
}

} // namespace

double QuadraticSurd::toDouble() const
{
    return (a.toDouble() + sign * std::sqrt(b.toDouble())) / c.toDouble();
}

Polynomial QuadraticSurd::minimalPolynomial() const
{
    return Polynomial({(a * a - b) / (c * c), Rational(-2) * a / c, Rational(1)});
}

std::pair<Rational, Rational> QuadraticSurd::enclose(const Rational& width) const
{
    auto [slo, shi] = sqrtEnclosure(b, width * c);
    if (sign > 0)
        return {(a + slo) / c, (a + shi) / c};
    return {(a - shi) / c, (a - slo) / c};
}

QuadraticSurd QuadraticSurd::affine(const Rational& s, const Rational& t) const
{
    if (s.isZero())
        throw ParameterError("QuadraticSurd::affine with zero slope");
    // s (a + e sqrt b)/c + t = (s a + t c + s e sqrt b)/c
    QuadraticSurd out{s * a + t * c, b, c, sign};
    if (s.sign() < 0)
        out.sign = -sign;
    const Rational k = s.abs();
    out.a = out.a / k;
    out.c = out.c / k;
    return out;
}

std::string QuadraticSurd::toString() const
{
    std::ostringstream os;
    os << "(" << a << (sign > 0 ? " + " : " - ") << "sqrt(" << b << "))";
    if (c != Rational(1))
        os << "/" << c;
    return os.str();
}

int QuadraticValue::sign() const
{
    if (v.isZero() || b.isZero())
        return u.sign();
    const int su = u.sign();
    const int sv = v.sign();
    if (su == 0)
        return sv;
    if (su == sv)
        return su;
    // opposite signs: compare u^2 with v^2 b
    const Rational lhs = u * u;
    const Rational rhs = v * v * b;
    if (lhs == rhs)
        return 0;
    return lhs > rhs ? su : sv;
}

double QuadraticValue::toDouble() const
{
    return u.toDouble() + v.toDouble() * std::sqrt(b.toDouble());
}

std::string QuadraticValue::toString() const
{
    if (isRational())
        return u.toString();
    std::ostringstream os;
    os << u << (v.sign() < 0 ? " - " : " + ") << v.abs() << "*sqrt(" << b << ")";
    return os.str();
}

RootDescription RootDescription::exact(Rational v)
{
    RootDescription r;
    r.kind = Kind::ExactRational;
    r.value = std::move(v);
    return r;
}

RootDescription RootDescription::quadratic(QuadraticSurd s)
{
    RootDescription r;
    r.kind = Kind::QuadraticSurd;
    r.surd = std::move(s);
    return r;
}

RootDescription RootDescription::interval(Rational lo, Rational hi, Polynomial f)
{
    RootDescription r;
    r.kind = Kind::IsolatedInterval;
    r.lo = std::move(lo);
    r.hi = std::move(hi);
    r.defining = std::move(f);
    return r;
}

double RootDescription::approx() const
{
    switch (kind) {
    case Kind::ExactRational: return value.toDouble();
    case Kind::QuadraticSurd: return surd.toDouble();
    case Kind::IsolatedInterval: return half(lo + hi).toDouble();
    }
    return 0.0;
}

std::pair<Rational, Rational> RootDescription::enclose(const Rational& width) const
{
    switch (kind) {
    case Kind::ExactRational: return {value, value};
    case Kind::QuadraticSurd: return surd.enclose(width);
    case Kind::IsolatedInterval: {
        Rational l = lo, h = hi;
        refineInterval(defining, l, h, width);
        return {l, h};
    }
    }
    return {};
}

std::string RootDescription::kindName() const
{
    switch (kind) {
    case Kind::ExactRational: return "exact-rational";
    case Kind::QuadraticSurd: return "quadratic-surd";
    case Kind::IsolatedInterval: return "isolated-interval";
    }
    return "";
}

std::string RootDescription::toString() const
{
    switch (kind) {
    case Kind::ExactRational: return value.toString();
    case Kind::QuadraticSurd: return surd.toString();
    case Kind::IsolatedInterval: {
        std::ostringstream os;
        os << "root of " << defining.toString() << " in (" << lo.toDouble() << ", " << hi.toDouble() << ")";
        return os.str();
    }
    }
    return "";
}

Rational defaultIsolationWidth()
{
    return Rational(1, 1000000000000L);
}

int signVariations(const std::vector<Rational>& coeffs)
{
    int count = 0;
    int last = 0;
    for (const auto& c : coeffs) {
        const int s = c.sign();
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++count;
        last = s;
    }
    return count;
}

void refineInterval(const Polynomial& f, Rational& lo, Rational& hi, const Rational& width)
{
    int slo = f.signAt(lo);
    // lo may itself be a (simple) root left over from an earlier split; the
    // sign just to its right is then the sign of f'.
    if (slo == 0)
        slo = f.derivative().signAt(lo);
    while (hi - lo > width) {
        const Rational mid = half(lo + hi);
        const int sm = f.signAt(mid);
        if (sm == 0) {
            lo = hi = mid;
            return;
        }
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
}

std::vector<RootDescription> isolateRealRoots(const Polynomial& f)
{
    if (f.isZero())
        throw ParameterError("isolateRealRoots: zero polynomial");
    const Polynomial sf = squareFreePart(f);
    if (sf.degree() <= 0)
        return {};

    std::vector<Isolated> isolated = descartesIsolate(sf);
    std::vector<std::optional<RootDescription>> result(isolated.size());

    // Rational roots: a root p/q in lowest terms has q | A, so A*root is an
    // integer; once the interval is narrower than 1/A it holds at most one.
    Polynomial rest = sf;
    const mpz_class A = sf.primitiveIntegerCoeffs().back();
    for (std::size_t i = 0; i < isolated.size(); ++i) {
        auto& iso = isolated[i];
        if (iso.exact) {
            result[i] = RootDescription::exact(iso.value);
            rest = rest.divmod(Polynomial::linearFactor(iso.value)).first;
            continue;
        }
        refineInterval(sf, iso.lo, iso.hi, Rational(mpz_class(1), A * 2));
        if (iso.lo == iso.hi) {
            result[i] = RootDescription::exact(iso.lo);
            rest = rest.divmod(Polynomial::linearFactor(iso.lo)).first;
            continue;
        }
        const Rational candidate(mpz_class((iso.hi * Rational(A)).floor()), A);
        if (candidate > iso.lo && candidate < iso.hi && sf(candidate).isZero()) {
            result[i] = RootDescription::exact(candidate);
            rest = rest.divmod(Polynomial::linearFactor(candidate)).first;
        }
    }

    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < isolated.size(); ++i)
        if (!result[i])
            open.push_back(i);

    // Quadratic factors over Q: for a factor c x^2 + b x + d with c | A,
    // both A*(r1 + r2) and A*r1*r2 are integers.
    bool progress = true;
    while (progress && open.size() >= 2 && rest.degree() >= 2) {
        progress = false;
        if (rest.degree() == 2 && open.size() == 2) {
            auto [s1, s2] = quadraticRoots(rest);
            result[open[0]] = RootDescription::quadratic(s1);
            result[open[1]] = RootDescription::quadratic(s2);
            open.clear();
            break;
        }
        const mpz_class Ar = rest.primitiveIntegerCoeffs().back();
        for (std::size_t x = 0; x < open.size() && !progress; ++x) {
            for (std::size_t y = x + 1; y < open.size() && !progress; ++y) {
                auto& ix = isolated[open[x]];
                auto& iy = isolated[open[y]];
                const Rational mag = Rational(2) + ix.hi.abs() + ix.lo.abs() + iy.hi.abs() + iy.lo.abs();
                const Rational w = Rational(1) / (Rational(16) * Rational(Ar) * mag);
                refineInterval(rest, ix.lo, ix.hi, w);
                refineInterval(rest, iy.lo, iy.hi, w);
                const Rational mx = half(ix.lo + ix.hi), my = half(iy.lo + iy.hi);
                const Rational S(roundNearest(Rational(Ar) * (mx + my)));
                const Rational P(roundNearest(Rational(Ar) * mx * my));
                const Polynomial quad({P / Rational(Ar), -S / Rational(Ar), Rational(1)});
                auto [q, r] = rest.divmod(quad);
                // Rounding can land on a genuine factor whose roots are
                // elsewhere; accept it only if it vanishes in both intervals.
                if (!r.isZero() || quad.signAt(ix.lo) * quad.signAt(ix.hi) >= 0
                    || quad.signAt(iy.lo) * quad.signAt(iy.hi) >= 0)
                    continue;
                auto [s1, s2] = quadraticRoots(quad);
                result[open[x]] = RootDescription::quadratic(s1);
                result[open[y]] = RootDescription::quadratic(s2);
                rest = q;
                open.erase(open.begin() + static_cast<std::ptrdiff_t>(y));
                open.erase(open.begin() + static_cast<std::ptrdiff_t>(x));
                progress = true;
            }
        }
    }

    for (std::size_t i : open) {
        auto& iso = isolated[i];
        refineInterval(rest, iso.lo, iso.hi, defaultIsolationWidth());
        if (iso.lo == iso.hi)
            result[i] = RootDescription::exact(iso.lo);
        else
            result[i] = RootDescription::interval(iso.lo, iso.hi, rest);
    }

    std::vector<RootDescription> out;
    for (auto& r : result)
        out.push_back(std::move(*r));
    return out;
}

} // namespace asymean
