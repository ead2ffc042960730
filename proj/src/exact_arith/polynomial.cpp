#include "asymean/polynomial.hpp"

#include <sstream>

#include "asymean/error.hpp"

namespace asymean {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
    trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs)
{
    trim();
}

void Polynomial::trim()
{
    while (!c_.empty() && c_.back().isZero())
        c_.pop_back();
}

Rational Polynomial::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return Rational(0);
    return c_[static_cast<std::size_t>(i)];
}

Rational Polynomial::operator()(const Rational& x) const
{
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

double Polynomial::evaluate(double x) const
{
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + it->toDouble();
    return acc;
}

Polynomial Polynomial::derivative() const
{
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i)
        d.push_back(c_[i] * Rational(static_cast<long>(i)));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const
{
    if (isZero())
        return *this;
    return *this * leading().reciprocal();
}

std::vector<mpz_class> Polynomial::primitiveIntegerCoeffs() const
{
    mpz_class denLcm(1);
    for (const auto& c : c_)
        mpz_lcm(denLcm.get_mpz_t(), denLcm.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> ints;
    mpz_class content(0);
    for (const auto& c : c_) {
        mpz_class v = c.num() * (denLcm / c.den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        ints.push_back(v);
    }
    if (content == 0)
        return ints;
    if (ints.back() < 0)
        content = -content;
    for (auto& v : ints)
        v /= content;
    return ints;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.isZero() || b.isZero())
        return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
}

Polynomial operator*(Polynomial a, const Rational& s)
{
    for (auto& c : a.c_)
        c *= s;
    a.trim();
    return a;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const
{
    if (divisor.isZero())
        throw DivisionByZero();
    std::vector<Rational> rem = c_;
    const int dd = divisor.degree();
    const int qd = degree() - dd;
    if (qd < 0)
        return {Polynomial(), *this};
    std::vector<Rational> quot(static_cast<std::size_t>(qd + 1));
    const Rational lead = divisor.leading();
    for (int k = qd; k >= 0; --k) {
        const Rational factor = rem[static_cast<std::size_t>(k + dd)] / lead;
        quot[static_cast<std::size_t>(k)] = factor;
        if (factor.isZero())
            continue;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(k + j)] -= factor * divisor.c_[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::toString(const std::string& var) const
{
    if (isZero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<std::size_t>(i)];
        if (c.isZero())
            continue;
        Rational mag = c.abs();
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        const bool unit = mag == Rational(1);
        if (i == 0 || !unit)
            os << mag;
        if (i > 0 && !unit)
            os << "*";
        if (i >= 1)
            os << var;
        if (i >= 2)
            os << "^" << i;
    }
    return os.str();
}

Polynomial gcd(Polynomial a, Polynomial b)
{
    while (!b.isZero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Polynomial squareFreePart(const Polynomial& f)
{
    if (f.degree() <= 0)
        return f.monic();
    const Polynomial g = gcd(f, f.derivative());
    return f.divmod(g).first.monic();
}

Polynomial lagrangeInterpolate(std::span<const std::pair<Rational, Rational>> points)
{
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw ParameterError("lagrangeInterpolate: duplicate abscissa "
                                     + points[i].first.toString());

    Polynomial result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        Polynomial basis = Polynomial::constant(Rational(1));
        Rational denom(1);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i)
                continue;
            basis = basis * Polynomial::linearFactor(points[j].first);
            denom *= points[i].first - points[j].first;
        }
        result += basis * (points[i].second / denom);
    }
    return result;
}

} // namespace asymean
