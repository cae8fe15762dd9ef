#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "siegelp/cli.hpp"
#include "siegelp/json_io.hpp"
#include "siegelp/sseries.hpp"

#include <cstdlib>
#include <sstream>

using namespace siegelp;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string text_field(const std::string& text, const std::string& key)
{
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(key + " ", 0) == 0) {
            auto pos = line.find_first_not_of(' ', key.size());
            return line.substr(pos);
        }
    return {};
}

} // namespace

TEST_CASE("series in degree one top stratum is one")
{
    Run r = run({"series", "--p", "3", "--character", "quadratic", "--units", "1", "--exponents", "0", "--nu", "1"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(ratfunc_from_json(j["S"]) == RatFunc(1));
    CHECK(j["nu"] == 1);
    CHECK(j["character"] == "quadratic");
}

TEST_CASE("series output matches the engine and round trips")
{
    Run r = run({"series", "--p", "5", "--character", "trivial", "--units", "1,1", "--exponents", "0,0", "--nu", "0"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    SeriesEngine eng(Prime(5), Character::trivial);
    DiagonalForm N = make_diagonal(Prime(5), {1, 1}, {0, 0});
    SeriesValue v = eng.characteristic_value(N, 0);
    CHECK(ratfunc_from_json(j["S"]) == v.S);
    CHECK(ratfunc_from_json(j["beta"]) == v.beta);
    CHECK(ratfunc_from_json(j["F"]) == v.F);
    CHECK(j["local"]["fund_disc"] == "-4");
    CHECK(j["local"]["chiN_p"] == 1);
    CHECK(j["local"]["fund_disc_star"] == "-20");

    Run t = run({"series", "--p", "5", "--character", "trivial", "--units", "1,1", "--exponents", "0,0", "--nu", "0",
                 "--format", "text"});
    REQUIRE(t.code == 0);
    CHECK(text_field(t.out, "S") == v.S.to_string());
    CHECK(text_field(t.out, "F") == v.F.to_string());
}

TEST_CASE("cusp basis and matrix input")
{
    Run a = run({"series", "--p", "3", "--character", "quadratic", "--matrix", "[[2,1],[1,2]]", "--nu", "0",
                 "--basis", "cusp"});
    REQUIRE(a.code == 0);
    SeriesEngine eng(Prime(3), Character::quadratic);
    DiagonalForm J = jordan_diagonalize_Zp(HalfIntMatrix({{2, 1}, {1, 2}}), Prime(3));
    CHECK(ratfunc_from_json(json::parse(a.out)["S"]) == eng.cusp(J, 0));
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run({"series", "--p", "3", "--character", "trivial", "--units", "1", "--exponents", "0"}).code == 2);
    CHECK(run({"series", "--p", "2", "--character", "trivial", "--units", "1", "--exponents", "0", "--nu", "0"}).code == 2);
    CHECK(run({"series", "--p", "9", "--character", "trivial", "--units", "1", "--exponents", "0", "--nu", "0"}).code == 2);
    CHECK(run({"series", "--p", "3", "--character", "cubic", "--units", "1", "--exponents", "0", "--nu", "0"}).code == 2);
    CHECK(run({"series", "--p", "3", "--character", "trivial", "--units", "1,2", "--exponents", "0", "--nu", "0"}).code == 2);
    CHECK(run({"series", "--p", "3", "--character", "trivial", "--units", "1", "--exponents", "0", "--nu", "3"}).code == 2);
    CHECK(run({"series", "--p", "3", "--character", "trivial", "--matrix", "[[1,0],[0,2]]", "--nu", "0"}).code == 2);
    CHECK(run({"series", "--p", "3", "--character", "trivial", "--matrix", "[[2,1]", "--nu", "0"}).code == 2);
    CHECK(run({"check", "bogus"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    Run e = run({"series", "--p", "2", "--character", "trivial", "--units", "1", "--exponents", "0", "--nu", "0"});
    CHECK(e.out.empty());
    CHECK_FALSE(e.err.empty());
}

TEST_CASE("other failures exit with 3")
{
    CHECK(run({"series", "--p", "3", "--character", "trivial", "--matrix", "[[2,2],[2,2]]", "--nu", "0"}).code == 3);
    ::setenv("SIEGELP_BUDGET", "10", 1);
    Run r = run({"oracle", "--p", "3", "--character", "trivial", "--units", "1,1,1", "--exponents", "0,0,0", "--nu", "0",
                 "--order", "3"});
    ::unsetenv("SIEGELP_BUDGET");
    CHECK(r.code == 3);
    CHECK(r.err.find("budget") != std::string::npos);
}

TEST_CASE("oracle subcommand")
{
    Run r = run({"oracle", "--p", "3", "--character", "quadratic", "--units", "1,2", "--exponents", "0,1", "--nu", "1",
                 "--order", "3"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["ok"] == true);
    CHECK(j["max_abs_diff"].get<double>() < 1e-9);
    CHECK(j["oracle"].size() == 4);
}

TEST_CASE("check subcommand")
{
    Run r = run({"check", "matrix", "--max-n", "4", "--p", "3,5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("pass") != std::string::npos);
    CHECK(run({"check", "fe", "--max-n", "2", "--p", "3", "--max-exp", "1"}).code == 0);
    CHECK(run({"check", "lemmas", "--max-n", "3", "--seed", "5"}).code == 0);
    CHECK(run({"check", "golden"}).code == 0);
}

TEST_CASE("table subcommand")
{
    Run r = run({"table", "--p", "5", "--character", "trivial", "--max-n", "3"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    RatMatrixFn B, C;
    for (auto& row : j["B"]) {
        B.emplace_back();
        for (auto& e : row)
            B.back().push_back(ratfunc_from_json(e));
    }
    for (auto& row : j["C"]) {
        C.emplace_back();
        for (auto& e : row)
            C.back().push_back(ratfunc_from_json(e));
    }
    REQUIRE(B.size() == 4);
    RatMatrixFn P = matrix_product(B, C);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = 0; k < 4; ++k)
            CHECK(P[i][k] == RatFunc(i == k ? 1 : 0));
}

TEST_CASE("help exits cleanly")
{
    Run r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("series") != std::string::npos);
}
