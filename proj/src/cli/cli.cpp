#include "asymean/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "asymean/error.hpp"
#include "asymean/means.hpp"
#include "asymean/numeric.hpp"
#include "asymean/resultant.hpp"
#include "asymean/stability.hpp"

namespace asymean {

namespace {

using nlohmann::json;

const char* kSchema = "1";

json rationalJson(const Rational& r)
{
    return json{{"num", r.num().get_str()}, {"den", r.den().get_str()}};
}

json coefficientsJson(const Series& s)
{
    json arr = json::array();
    for (int n = 0; n <= s.order(); ++n) {
        json c = rationalJson(s[n]);
        c["t_power"] = n;
        c["x_power"] = 1 - n;
        arr.push_back(c);
    }
    return arr;
}

json polynomialJson(const Polynomial& f, const std::string& var)
{
    json coeffs = json::array();
    for (const auto& c : f.coeffs())
        coeffs.push_back(rationalJson(c));
    return json{{"variable", var}, {"coefficients_low_to_high", coeffs}, {"text", f.toString(var)}};
}

json numericJson(double v, const std::string& provenance)
{
    return json{{"value", v}, {"provenance", provenance}};
}

json rootJson(const RootDescription& r)
{
    json j{{"kind", r.kindName()}, {"text", r.toString()}};
    switch (r.kind) {
    case RootDescription::Kind::ExactRational:
        j["value"] = rationalJson(r.value);
        break;
    case RootDescription::Kind::QuadraticSurd:
        j["form"] = "(a + sign*sqrt(b))/c";
        j["a"] = rationalJson(r.surd.a);
        j["b"] = rationalJson(r.surd.b);
        j["c"] = rationalJson(r.surd.c);
        j["sign"] = r.surd.sign;
        break;
    case RootDescription::Kind::IsolatedInterval:
        j["lo"] = rationalJson(r.lo);
        j["hi"] = rationalJson(r.hi);
        j["defining"] = polynomialJson(r.defining, "x");
        break;
    }
    j["approx"] = numericJson(r.approx(), "floating-point rendering of the exact root");
    return j;
}

json leadingJson(const LeadingCoefficient& c)
{
    json j{{"sign", c.sign}, {"text", c.toString()}};
    if (c.kind == LeadingCoefficient::Kind::Exact) {
        j["kind"] = "exact";
        j["form"] = "u + v*sqrt(b)";
        j["u"] = rationalJson(c.exact.u);
        j["v"] = rationalJson(c.exact.v);
        j["b"] = rationalJson(c.exact.b);
    } else {
        j["kind"] = "interval";
        j["lo"] = rationalJson(c.lo);
        j["hi"] = rationalJson(c.hi);
    }
    j["approx"] = numericJson(c.approx(), "floating-point rendering of the exact value");
    return j;
}

json boundaryJson(const BoundaryEvidence& b)
{
    return json{{"p", b.p},
                {"q", b.q},
                {"mean_limit", numericJson(b.meanLimit, b.method)},
                {"resultant_limit", numericJson(b.resultantLimit, b.method)},
                {"conflicts_with_asymptotic_sign", b.conflict}};
}

// Flattens a report into "path: value" lines; coefficient arrays become rows.
void renderTable(const json& j, const std::string& path, std::ostream& out)
{
    if (j.is_object() && j.contains("num") && j.contains("den") && j.size() <= 4) {
        const std::string den = j["den"].get<std::string>();
        std::string value = j["num"].get<std::string>() + (den == "1" ? "" : "/" + den);
        if (j.contains("t_power"))
            out << "  t^" << j["t_power"].get<int>() << " x^" << j["x_power"].get<int>() << "\t" << value << "\n";
        else
            out << path << ": " << value << "\n";
        return;
    }
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            renderTable(v, path.empty() ? k : path + "." + k, out);
        return;
    }
    if (j.is_array()) {
        if (!j.empty() && j[0].is_object() && j[0].contains("t_power")) {
            out << path << ":\n";
            for (const auto& v : j)
                renderTable(v, path, out);
            return;
        }
        for (std::size_t i = 0; i < j.size(); ++i)
            renderTable(j[i], path + "[" + std::to_string(i) + "]", out);
        return;
    }
    out << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

std::string lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

struct MeanFlags
{
    std::string alpha;
    std::string r;
    std::string p;
};

// "--mean Lalpha --alpha 1/3" and "--mean Lalpha(1/3)" are both accepted.
MeanSpec buildSpec(const std::string& text, const MeanFlags& f)
{
    if (text.find('(') != std::string::npos)
        return parseMeanSpec(text);
    const std::string name = lower(text);
    auto need = [&](const std::string& value, const char* flag) {
        if (value.empty())
            throw UsageError("mean '" + text + "' needs " + flag);
        Rational::parse(value);
        return value;
    };
    if (name == "lalpha" || name == "salpha")
        return parseMeanSpec(text + "(" + need(f.alpha, "--alpha") + ")");
    if (name == "malphar" || name == "mar")
        return parseMeanSpec(text + "(" + need(f.alpha, "--alpha") + "," + need(f.r, "--r") + ")");
    if (name == "b" || name == "power")
        return parseMeanSpec(text + "(" + need(f.p, "--p") + ")");
    return parseMeanSpec(text);
}

struct Options
{
    std::string format = "json";
    std::string out;
    std::string mean;
    MeanFlags flags;
    std::string a2;
    std::string K, M, N, q;
    int order = 8;
    int maxOrder = 6;
    std::string m1, m2;
    std::string lo = "1/1000", hi = "10";
    int count = 10000;
    std::string scale = "linear";
    std::string t = "1";
    std::string xlo = "100", xhi = "100000";
};

void addCommon(CLI::App* sub, Options& o)
{
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--out", o.out, "Also write the JSON report to this file");
}

void addMeanFlags(CLI::App* sub, Options& o, bool required)
{
    auto* opt = sub->add_option("--mean", o.mean, "Mean: A G H L P T HZ M1..M5 B Lalpha Salpha Malphar, or e.g. Lalpha(1/3)");
    if (required)
        opt->required();
    sub->add_option("--alpha", o.flags.alpha, "alpha as an exact fraction");
    sub->add_option("--r", o.flags.r, "r as an exact fraction");
    sub->add_option("--p", o.flags.p, "p as an exact fraction");
}

json runExpand(const Options& o)
{
    json j;
    MeanExpansion e;
    if (lower(o.mean) == "stable") {
        if (o.a2.empty())
            throw UsageError("mean 'stable' needs --a2");
        const Rational a2 = Rational::parse(o.a2);
        e = expandStable(a2, o.order);
        j["mean"] = "stable(a2=" + a2.toString() + ")";
    } else {
        const MeanSpec spec = buildSpec(o.mean, o.flags);
        e = expand(spec, o.order);
        j["mean"] = describe(spec);
    }
    j["order"] = o.order;
    j["parity"] = parityName(e.parity);
    j["coefficients"] = coefficientsJson(e.coeffs);
    return j;
}

MeanSpec resultantSide(const std::string& text, const std::string& power, const char* which)
{
    if (!text.empty())
        return parseMeanSpec(text);
    if (!power.empty())
        return PowerMean{Rational::parse(power)};
    throw UsageError(std::string("resultant needs --") + which);
}

json runResultant(const Options& o)
{
    const MeanSpec K = resultantSide(o.K, o.flags.p, "K (or --p)");
    const MeanSpec N = resultantSide(o.N, o.q, "N (or --q)");
    if (o.M.empty())
        throw UsageError("resultant needs --M");
    const MeanSpec M = parseMeanSpec(o.M);
    const MeanExpansion eN = expand(N, o.order);
    const MeanExpansion r = resultantExpansion(expand(K, o.order), expand(M, o.order), eN, o.order);
    return json{{"K", describe(K)},
                {"M", describe(M)},
                {"N", describe(N)},
                {"case", caseName(classifyCase(eN))},
                {"order", o.order},
                {"parity", parityName(r.parity)},
                {"coefficients", coefficientsJson(r.coeffs)}};
}

json runStable(const Options& o)
{
    const MeanSpec spec = buildSpec(o.mean, o.flags);
    const StabilityReport rep = isStable(spec, o.order);
    json j{{"mean", describe(spec)}, {"order", rep.order}, {"stable", rep.stable}};
    if (rep.mismatchIndex)
        j["first_mismatch"] = json{{"t_power", *rep.mismatchIndex},
                                   {"x_power", 1 - *rep.mismatchIndex},
                                   {"defect", rationalJson(rep.defect)}};
    return j;
}

json runSolve(const Options& o)
{
    const MeanSpec spec = buildSpec(o.mean, o.flags);
    const StabilizabilityVerdict v = optimalParameters(spec, o.maxOrder);
    json j{{"mean", describe(spec)},
           {"max_order", v.maxOrder},
           {"relation", relationName(v.relation)},
           {"parameter_free_leading_term", v.parameterFree},
           {"family_stabilizes", v.familyStabilizes}};
    if (v.locus)
        j["locus"] = json{{"form", "q = slope*p + intercept"},
                          {"slope", rationalJson(v.locus->slope)},
                          {"intercept", rationalJson(v.locus->intercept)},
                          {"text", v.locus->toString()}};
    j["generic_leading"] = json{{"t_power", v.genericOrder}, {"polynomial", polynomialJson(v.genericLeading, "p")}};
    json sols = json::array();
    for (const auto& s : v.solutions) {
        json sj{{"p", rootJson(s.p)}, {"q", rootJson(s.q)}, {"relation", relationName(s.relation)}};
        if (s.achievedOrder) {
            sj["leading_t_power"] = *s.achievedOrder;
            sj["leading_x_power"] = 1 - *s.achievedOrder;
            sj["leading_coefficient"] = leadingJson(*s.leading);
        } else {
            sj["vanishes_through_order"] = v.maxOrder;
        }
        if (s.boundary)
            sj["boundary"] = boundaryJson(*s.boundary);
        sols.push_back(sj);
    }
    j["solutions"] = sols;
    json probes = json::array();
    for (const auto& b : v.sampledBoundary)
        probes.push_back(boundaryJson(b));
    if (!probes.empty())
        j["boundary_probes"] = probes;
    return j;
}

double parseNumber(const std::string& s)
{
    return Rational::parse(s).toDouble();
}

json runCompare(const Options& o)
{
    if (o.m1.empty() || o.m2.empty())
        throw UsageError("compare needs --m1 and --m2");
    const MeanSpec a = parseMeanSpec(o.m1);
    const MeanSpec b = parseMeanSpec(o.m2);
    GridSpec g{parseNumber(o.lo), parseNumber(o.hi), o.count,
               o.scale == "log" ? GridSpec::Scale::Logarithmic : GridSpec::Scale::Linear};
    const ComparisonReport r = compareScan(a, b, g);
    json w = json::array();
    for (const auto& x : r.witnesses)
        w.push_back(json{{"x_lo", x.lo}, {"x_hi", x.hi}});
    return json{{"m1", describe(a)},
                {"m2", describe(b)},
                {"grid", json{{"lo", g.lo}, {"hi", g.hi}, {"count", g.count}, {"scale", o.scale}}},
                {"verdict", ComparisonReport::verdictName(r.verdict)},
                {"witnesses", w},
                {"min_gap", numericJson(r.minGap, "double-precision grid scan")},
                {"note", "grid evidence only; no claim beyond the sampled points"}};
}

json runLimit(const Options& o)
{
    LimitEstimate est;
    json j;
    if (!o.K.empty() || !o.N.empty() || !o.M.empty()) {
        const MeanSpec K = resultantSide(o.K, o.flags.p, "K (or --p)");
        const MeanSpec N = resultantSide(o.N, o.q, "N (or --q)");
        if (o.M.empty())
            throw UsageError("limit of a resultant needs --M");
        const MeanSpec M = parseMeanSpec(o.M);
        est = boundaryLimitResultant(model(K), model(M), model(N));
        j["expression"] = "R(" + describe(K) + "," + describe(M) + "," + describe(N) + ")";
    } else {
        if (o.mean.empty())
            throw UsageError("limit needs --mean or --K/--M/--N");
        const MeanSpec spec = buildSpec(o.mean, o.flags);
        est = boundaryLimit(spec);
        j["expression"] = describe(spec);
    }
    j["point"] = "(s, 1-s), s -> 0";
    j["limit"] = numericJson(est.value, est.methodName());
    return j;
}

json runVerify(const Options& o)
{
    const MeanSpec spec = buildSpec(o.mean, o.flags);
    const GridSpec g{parseNumber(o.xlo), parseNumber(o.xhi), o.count, GridSpec::Scale::Logarithmic};
    const DecayReport r = verifyExpansionDecay(spec, o.order, parseNumber(o.t), g);
    json j{{"mean", describe(spec)}, {"order", r.order}, {"exact_zero", r.exactZero}, {"noise_floor", r.noiseFloor}};
    if (r.slope)
        j["slope"] = numericJson(*r.slope, "least-squares fit of log remainder, 100-digit evaluation");
    if (r.expectedExponent)
        j["expected_exponent"] = *r.expectedExponent;
    json s = json::array();
    for (const auto& [x, rem] : r.samples)
        s.push_back(json{{"x", x}, {"remainder", rem}});
    j["samples"] = s;
    return j;
}

void emit(json report, const std::string& command, const Options& o, std::ostream& out)
{
    json full{{"schema", kSchema}, {"command", command}};
    full.update(report);
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f)
            throw UsageError("cannot write " + o.out);
        f << full.dump(2) << "\n";
    }
    if (o.format == "table")
        renderTable(full, "", out);
    else
        out << full.dump(2) << "\n";
}

} // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Asymptotic expansions, resultant mean-maps and stabilizability of bivariate means", "asymean"};
    app.require_subcommand(1);
    Options o;

    auto* expandCmd = app.add_subcommand("expand", "Asymptotic expansion of a mean");
    addMeanFlags(expandCmd, o, true);
    expandCmd->add_option("--a2", o.a2, "t^2 coefficient of the stable mean (with --mean stable)");
    expandCmd->add_option("--order", o.order, "Highest power of t")->check(CLI::Range(0, 200));

    auto* resultantCmd = app.add_subcommand("resultant", "Expansion of R(K, M, N)");
    resultantCmd->add_option("--K", o.K, "Outer mean K");
    resultantCmd->add_option("--M", o.M, "Middle mean M");
    resultantCmd->add_option("--N", o.N, "Inner mean N");
    resultantCmd->add_option("--p", o.flags.p, "Use K = B(p)");
    resultantCmd->add_option("--q", o.q, "Use N = B(q)");
    resultantCmd->add_option("--order", o.order, "Highest power of t")->check(CLI::Range(0, 100));

    auto* stableCmd = app.add_subcommand("stable", "Check R(M, M, M) = M to an order");
    addMeanFlags(stableCmd, o, true);
    stableCmd->add_option("--order", o.order, "Highest power of t")->check(CLI::Range(4, 100));

    auto* solveCmd = app.add_subcommand("solve", "Optimal (p, q) for R(B_p, M, B_q) against M");
    addMeanFlags(solveCmd, o, true);
    solveCmd->add_option("--max-order", o.maxOrder, "Highest power of t examined")->check(CLI::Range(2, 40));

    auto* compareCmd = app.add_subcommand("compare", "Compare two means on a grid of f_M");
    compareCmd->add_option("--m1", o.m1, "First mean")->required();
    compareCmd->add_option("--m2", o.m2, "Second mean")->required();
    compareCmd->add_option("--lo", o.lo, "Grid start (fraction)");
    compareCmd->add_option("--hi", o.hi, "Grid end (fraction)");
    compareCmd->add_option("--count", o.count, "Grid points")->check(CLI::Range(2, 10000000));
    compareCmd->add_option("--scale", o.scale, "Grid spacing")->check(CLI::IsMember({"linear", "log"}));

    auto* limitCmd = app.add_subcommand("limit", "Limit at (s, 1 - s) as s -> 0");
    addMeanFlags(limitCmd, o, false);
    limitCmd->add_option("--K", o.K, "Outer mean of a resultant");
    limitCmd->add_option("--M", o.M, "Middle mean of a resultant");
    limitCmd->add_option("--N", o.N, "Inner mean of a resultant");
    limitCmd->add_option("--q", o.q, "Use N = B(q)");

    auto* verifyCmd = app.add_subcommand("verify", "Remainder decay of a truncated expansion");
    addMeanFlags(verifyCmd, o, true);
    verifyCmd->add_option("--order", o.order, "Last retained power of t")->check(CLI::Range(0, 60));
    verifyCmd->add_option("--t", o.t, "Half-difference t (fraction)");
    verifyCmd->add_option("--x-lo", o.xlo, "Smallest x (fraction)");
    verifyCmd->add_option("--x-hi", o.xhi, "Largest x (fraction)");
    verifyCmd->add_option("--count", o.count, "Grid points")->check(CLI::Range(3, 10000));

    for (auto* sub : {expandCmd, resultantCmd, stableCmd, solveCmd, compareCmd, limitCmd, verifyCmd})
        addCommon(sub, o);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return ExitUsageError;
    }

    // verify defaults to a smaller grid than compare
    if (verifyCmd->parsed() && verifyCmd->count("--count") == 0)
        o.count = 16;

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        json report;
        if (command == "expand")
            report = runExpand(o);
        else if (command == "resultant")
            report = runResultant(o);
        else if (command == "stable")
            report = runStable(o);
        else if (command == "solve")
            report = runSolve(o);
        else if (command == "compare")
            report = runCompare(o);
        else if (command == "limit")
            report = runLimit(o);
        else
            report = runVerify(o);
        emit(std::move(report), command, o, out);
        return ExitOk;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return ExitUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        out << json{{"schema", kSchema}, {"command", command},
                    {"error", {{"kind", e.kind()}, {"message", e.what()}}}}.dump(2) << "\n";
        return ExitEngineError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        out << json{{"schema", kSchema}, {"command", command},
                    {"error", {{"kind", "internal"}, {"message", e.what()}}}}.dump(2) << "\n";
        return ExitEngineError;
    }
}

} // namespace asymean
