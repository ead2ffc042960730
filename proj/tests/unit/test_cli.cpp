#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "asymean/cli.hpp"

using namespace asymean;
using nlohmann::json;

namespace {

struct Run
{
    int code;
    std::string out;
    std::string err;

    json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = runCli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string coeff(const json& c) { return c["num"].get<std::string>() + "/" + c["den"].get<std::string>(); }

} // namespace

TEST_CASE("expand reports exact coefficients")
{
    const Run r = run({"expand", "--mean", "Lalpha", "--alpha", "1/3", "--order", "8", "--format", "json"});
    REQUIRE(r.code == ExitOk);
    const json j = r.report();
    CHECK(j["schema"] == "1");
    CHECK(j["command"] == "expand");
    CHECK(j["parity"] == "even-only");
    const auto& c = j["coefficients"];
    REQUIRE(c.size() == 9);
    CHECK(coeff(c[2]) == "-11/27");
    CHECK(c[2]["t_power"] == 2);
    CHECK(c[2]["x_power"] == -1);
    CHECK(coeff(c[4]) == "-80/729");

    // the inline parameter form is equivalent
    CHECK(run({"expand", "--mean", "Lalpha(1/3)", "--order", "8"}).report()["coefficients"] == c);
}

TEST_CASE("expand of a stable mean")
{
    const Run r = run({"expand", "--mean", "stable", "--a2", "-1/4", "--order", "6"});
    REQUIRE(r.code == ExitOk);
    const json c = r.report()["coefficients"];
    CHECK(coeff(c[4]) == "-1/16");
    CHECK(coeff(c[6]) == "-1/32");
}

TEST_CASE("resultant, stable and solve")
{
    const Run r = run({"resultant", "--K", "A", "--M", "A", "--N", "M1", "--order", "4"});
    REQUIRE(r.code == ExitOk);
    CHECK(coeff(r.report()["coefficients"][1]) == "1/2");

    const Run pq = run({"resultant", "--p", "1", "--q", "0", "--M", "L", "--order", "4"});
    REQUIRE(pq.code == ExitOk);

    const Run s = run({"stable", "--mean", "Lalpha(1/2)", "--order", "8"});
    REQUIRE(s.code == ExitOk);
    CHECK(s.report()["stable"] == true);

    const Run v = run({"solve", "--mean", "M2", "--max-order", "6"});
    REQUIRE(v.code == ExitOk);
    const json j = v.report();
    CHECK(j["relation"] == "candidate-super");
    REQUIRE(j["solutions"].size() == 2);
    CHECK(j["locus"]["text"] == "q = -1/2*p + 5/2");
}

TEST_CASE("numeric commands label their provenance")
{
    const Run c = run({"compare", "--m1", "A", "--m2", "M1", "--count", "2000"});
    REQUIRE(c.code == ExitOk);
    const json j = c.report();
    CHECK(j["verdict"] == "crossing");
    CHECK(j["min_gap"].contains("provenance"));

    const Run l = run({"limit", "--K", "A", "--M", "M1", "--N", "A"});
    REQUIRE(l.code == ExitOk);
    CHECK(l.report()["limit"]["provenance"] == "closed-form");
    CHECK(l.report()["limit"]["value"].get<double>() == doctest::Approx(0.474754).epsilon(1e-5));

    const Run d = run({"verify", "--mean", "M2", "--order", "4", "--t", "1"});
    REQUIRE(d.code == ExitOk);
    CHECK(d.report()["expected_exponent"] == -5);
}

TEST_CASE("table output")
{
    const Run r = run({"expand", "--mean", "M2", "--order", "4", "--format", "table"});
    REQUIRE(r.code == ExitOk);
    CHECK(r.out.find("t^4 x^-3\t-2/9") != std::string::npos);
    CHECK(r.out.find("parity: even-only") != std::string::npos);
}

TEST_CASE("usage errors exit with 2")
{
    const Run dec = run({"expand", "--mean", "B(0.5)"});
    CHECK(dec.code == ExitUsageError);
    CHECK(dec.err.find("exact fraction") != std::string::npos);
    CHECK(run({"expand", "--mean", "Q"}).code == ExitUsageError);
    CHECK(run({"frobnicate"}).code == ExitUsageError);
    CHECK(run({}).code == ExitUsageError);
    CHECK(run({"expand", "--mean", "A", "--format", "xml"}).code == ExitUsageError);
    CHECK(run({"compare", "--m1", "A", "--m2", "G", "--lo", "0.5"}).code == ExitUsageError);
    CHECK(run({"expand"}).code == ExitUsageError);
}

TEST_CASE("engine errors exit with 1 and a JSON error object")
{
    const Run r = run({"expand", "--mean", "Lalpha(2)"});
    CHECK(r.code == ExitEngineError);
    CHECK_FALSE(r.err.empty());
    const json j = r.report();
    CHECK(j["error"]["kind"] == "parameter");
    CHECK(j["command"] == "expand");

    const Run g = run({"compare", "--m1", "A", "--m2", "G", "--lo", "2", "--hi", "1"});
    CHECK(g.code == ExitEngineError);
}

TEST_CASE("--out writes the same JSON report")
{
    const auto path = std::filesystem::temp_directory_path() / "asymean_cli_test.json";
    const Run r = run({"expand", "--mean", "M4", "--order", "8", "--out", path.string()});
    REQUIRE(r.code == ExitOk);
    std::ifstream f(path);
    REQUIRE(f.good());
    const json fromFile = json::parse(f);
    CHECK(fromFile == r.report());
    std::filesystem::remove(path);
}

TEST_CASE("help exits cleanly")
{
    const Run r = run({"--help"});
    CHECK(r.code == ExitOk);
    CHECK(r.out.find("expand") != std::string::npos);
}
