#include <cctype>
#include <sstream>
#include <vector>

#include "asymean/error.hpp"
#include "asymean/means.hpp"

namespace asymean {

namespace {

std::string trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return std::string(s);
}

std::string lower(std::string s)
{
    for (auto& ch : s)
        ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return s;
}

std::vector<Rational> parseArgs(std::string_view args)
{
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= args.size()) {
        const auto comma = args.find(',', start);
        const auto piece = args.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        out.push_back(Rational::parse(piece));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

void expectArgs(const std::string& name, const std::vector<Rational>& args, std::size_t n)
{
    if (args.size() != n)
        throw UsageError("mean '" + name + "' takes " + std::to_string(n) + " argument(s)");
}

} // namespace

MeanSpec parseMeanSpec(std::string_view text)
{
    const std::string s = trim(text);
    const auto open = s.find('(');
    std::string name = lower(trim(s.substr(0, open)));
    std::vector<Rational> args;
    if (open != std::string::npos) {
        if (s.back() != ')')
            throw UsageError("malformed mean '" + s + "': missing ')'");
        args = parseArgs(std::string_view(s).substr(open + 1, s.size() - open - 2));
    }

    MeanSpec spec;
    if (name == "a" || name == "g" || name == "h") {
        expectArgs(name, args, 0);
        spec = PowerMean{Rational(name == "a" ? 1 : name == "g" ? 0 : -1)};
    } else if (name == "l") {
        expectArgs(name, args, 0);
        spec = SAlphaMean{Rational(0)};
    } else if (name == "p" || name == "t") {
        expectArgs(name, args, 0);
        spec = SAlphaMean{name == "p" ? Rational(1, 2) : Rational(1)};
    } else if (name == "hz" || name == "hz1/4") {
        expectArgs(name, args, 0);
        spec = LAlphaMean{Rational(1, 4)};
    } else if (name == "b" || name == "power") {
        expectArgs(name, args, 1);
        spec = PowerMean{args[0]};
    } else if (name == "lalpha") {
        expectArgs(name, args, 1);
        spec = LAlphaMean{args[0]};
    } else if (name == "salpha") {
        expectArgs(name, args, 1);
        spec = SAlphaMean{args[0]};
    } else if (name.size() == 2 && name[0] == 'm' && name[1] >= '1' && name[1] <= '5') {
        expectArgs(name, args, 0);
        spec = IndexedMean{name[1] - '0'};
    } else if (name == "malphar" || name == "mar") {
        expectArgs(name, args, 2);
        spec = MAlphaRMean{args[0], args[1]};
    } else {
        throw UsageError("unknown mean '" + s + "'");
    }
    validate(spec);
    return spec;
}

void validate(const MeanSpec& spec)
{
    auto checkAlpha = [](const Rational& a, const char* who) {
        if (a.abs() > Rational(1))
            throw ParameterError(std::string(who) + " requires |alpha| <= 1, got " + a.toString());
    };
    std::visit([&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, LAlphaMean>) {
            checkAlpha(m.alpha, "Lalpha");
        } else if constexpr (std::is_same_v<T, SAlphaMean>) {
            checkAlpha(m.alpha, "Salpha");
        } else if constexpr (std::is_same_v<T, IndexedMean>) {
            if (m.which < 1 || m.which > 5)
                throw ParameterError("indexed mean must be M1..M5");
        } else if constexpr (std::is_same_v<T, MAlphaRMean>) {
            checkAlpha(m.alpha, "Malphar");
            if (m.r.sign() <= 0)
                throw ParameterError("Malphar requires r > 0, got " + m.r.toString());
        } else if constexpr (std::is_same_v<T, MuGeneratedMean>) {
            if (m.c.at(0) != Rational(1))
                throw ParameterError("mu-generated mean requires c_0 = 1");
        }
    }, spec);
}

std::string describe(const MeanSpec& spec)
{
    std::ostringstream os;
    std::visit([&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, PowerMean>)
            os << "B(" << m.p << ")";
        else if constexpr (std::is_same_v<T, LAlphaMean>)
            os << "Lalpha(" << m.alpha << ")";
        else if constexpr (std::is_same_v<T, SAlphaMean>)
            os << "Salpha(" << m.alpha << ")";
        else if constexpr (std::is_same_v<T, IndexedMean>)
            os << "M" << m.which;
        else if constexpr (std::is_same_v<T, MAlphaRMean>)
            os << "Malphar(" << m.alpha << "," << m.r << ")";
        else
            os << "mu-generated";
    }, spec);
    return os.str();
}

std::string parityName(Parity p)
{
    return p == Parity::EvenOnly ? "even-only" : "mixed";
}

} // namespace asymean
