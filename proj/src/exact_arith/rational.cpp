#include "asymean/rational.hpp"

#include <cctype>
#include <ostream>

#include "asymean/error.hpp"

namespace asymean {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den)
{
    if (den == 0)
        throw DivisionByZero();
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpq_class& value) : v_(value)
{
    v_.canonicalize();
}

namespace {

bool isDigits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);

    if (s.find_first_of(".eE") != std::string_view::npos)
        throw UsageError("decimal value '" + std::string(text)
                         + "' rejected; write it as an exact fraction such as 1/3");

    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto slash = s.find('/');
    std::string_view numText = s.substr(0, slash);
    std::string_view denText = slash == std::string_view::npos ? "1" : s.substr(slash + 1);
    if (!isDigits(numText) || !isDigits(denText))
        throw UsageError("malformed rational '" + std::string(text) + "'; expected n or n/d");

    mpz_class num(std::string(numText), 10);
    mpz_class den(std::string(denText), 10);
    if (den == 0)
        throw UsageError("zero denominator in '" + std::string(text) + "'");
    if (negative)
        num = -num;
    return Rational(num, den);
}

std::string Rational::toString() const
{
    return v_.get_str();
}

Rational Rational::abs() const
{
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

Rational Rational::reciprocal() const
{
    if (isZero())
        throw DivisionByZero();
    return Rational(v_.get_den(), v_.get_num());
}

Rational Rational::pow(long exponent) const
{
    if (exponent < 0)
        return reciprocal().pow(-exponent);
    Rational result(1);
    Rational base = *this;
    auto e = static_cast<unsigned long>(exponent);
    while (e) {
        if (e & 1u)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

mpz_class Rational::floor() const
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.isZero())
        throw DivisionByZero();
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const
{
    Rational r;
    r.v_ = -v_;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.toString();
}

Rational binomial(const Rational& r, unsigned k)
{
    Rational result(1);
    for (unsigned i = 0; i < k; ++i)
        result *= (r - Rational(static_cast<long>(i))) / Rational(static_cast<long>(i + 1));
    return result;
}

bool rationalSqrt(const Rational& value, Rational& root)
{
    if (value.sign() < 0)
        return false;
    const mpz_class n = value.num();
    const mpz_class d = value.den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return false;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    root = Rational(sn, sd);
    return true;
}

std::pair<Rational, Rational> sqrtEnclosure(const Rational& value, const Rational& width)
{
    if (value.sign() < 0)
        throw ParameterError("square root of a negative rational");
    Rational exact;
    if (rationalSqrt(value, exact))
        return {exact, exact};
    Rational lo(0);
    Rational hi = value > Rational(1) ? value : Rational(1);
    while (hi - lo > width) {
        Rational mid = (lo + hi) / Rational(2);
        if (mid * mid < value)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

} // namespace asymean
