#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "siegelp/errors.hpp"
#include "siegelp/json_io.hpp"
#include "siegelp/ratfun.hpp"

#include <random>

using namespace siegelp;

namespace {

LaurentPoly mono(long c, int e)
{
    return LaurentPoly::monomial(QElem(c), e);
}

RatFunc X(int e = 1)
{
    return RatFunc::monomial(QElem(1), e);
}

RatFunc random_rf(std::mt19937_64& g, long d)
{
    std::uniform_int_distribution<long> c(-4, 4);
    std::uniform_int_distribution<int> deg(0, 3), low(-2, 2);
    auto poly = [&](int lo) {
        LaurentPoly f;
        int n = deg(g);
        for (int i = 0; i <= n; ++i)
            f += LaurentPoly::monomial(QElem(Rat(c(g)), Rat(c(g)), d), lo + i);
        return f;
    };
    LaurentPoly den = poly(0);
    if (den.is_zero())
        den = LaurentPoly(QElem(1));
    return RatFunc::normalize(poly(low(g)), den);
}

} // namespace

TEST_CASE("normalize examples")
{
    RatFunc a = RatFunc::normalize(mono(1, 2), mono(1, 1));
    CHECK(a == X());
    CHECK(a.den() == LaurentPoly(QElem(1)));

    RatFunc b = RatFunc::normalize(mono(1, 0) - mono(1, 2), mono(1, 0) - mono(1, 1));
    CHECK(b == RatFunc(mono(1, 0) + mono(1, 1)));

    // ((1 - 27 X^2) X) / (2 - 54 X^2) = X / 2
    LaurentPoly num = (mono(1, 0) - mono(27, 2)) * mono(1, 1);
    LaurentPoly den = mono(2, 0) - mono(54, 2);
    CHECK(RatFunc::normalize(num, den) == RatFunc::monomial(QElem(Rat(1, 2)), 1));

    CHECK_THROWS_AS(RatFunc::normalize(mono(1, 0), LaurentPoly()), DivisionByZero);
    CHECK(RatFunc::normalize(LaurentPoly(), mono(3, 1)) == RatFunc());
}

TEST_CASE("arithmetic examples")
{
    RatFunc x = RatFunc(1) / RatFunc::one_minus(QElem(3), 1);
    CHECK(x + RatFunc() == x);
    CHECK(x * (RatFunc(1) / x) == RatFunc(1));
    RatFunc geo = RatFunc(1) / RatFunc::one_minus(QElem(1), 1);
    CHECK(geo - X() * geo == RatFunc(1));
    CHECK_THROWS_AS(x / RatFunc(), DivisionByZero);
}

TEST_CASE("shift_s examples")
{
    CHECK(RatFunc(7).shift_s(3) == RatFunc(7));
    CHECK(X().shift_s(3) == RatFunc::monomial(QElem(3), 1));
    RatFunc f = RatFunc(1) / RatFunc::one_minus(QElem(9), 1);
    CHECK(f.shift_s(3) == RatFunc(1) / RatFunc::one_minus(QElem(27), 1));
}

TEST_CASE("reflect_s examples")
{
    CHECK(RatFunc(5).reflect_s(3, 1) == RatFunc(5));
    CHECK(X().reflect_s(3, 1) == RatFunc::monomial(QElem(Rat(1, 9)), -1));
}

TEST_CASE("canonical form, involution and commuting substitutions on random inputs")
{
    std::mt19937_64 g(3);
    for (long d : {5L, -3L}) {
        for (int t = 0; t < 60; ++t) {
            RatFunc a = random_rf(g, d), b = random_rf(g, d);
            CHECK(RatFunc::normalize(a.num(), a.den()) == a);
            CHECK(a.reflect_s(5, 2).reflect_s(5, 2) == a);
            CHECK((a + b).shift_s(5) == a.shift_s(5) + b.shift_s(5));
            CHECK((a * b).shift_s(5) == a.shift_s(5) * b.shift_s(5));
            // equality agrees with cross multiplication
            RatFunc c = RatFunc::normalize(a.num() * b.den(), a.den() * b.den());
            CHECK(c == a);
            CHECK((a == b) == (a.num() * b.den() == b.num() * a.den()));
            if (!b.is_zero()) {
                CHECK((a / b) * b == a);
            }
        }
    }
}

TEST_CASE("taylor examples")
{
    auto t = (RatFunc(1) / RatFunc::one_minus(QElem(1), 1)).taylor(3);
    CHECK(t == std::vector<QElem>{QElem(1), QElem(1), QElem(1), QElem(1)});
    auto u = (X() / RatFunc::one_minus(QElem(3), 1)).taylor(3);
    CHECK(u == std::vector<QElem>{QElem(0), QElem(1), QElem(3), QElem(9)});
    auto w = RatFunc::normalize(mono(1, 0) - mono(1, 2), mono(1, 0) - mono(1, 1)).taylor(2);
    CHECK(w == std::vector<QElem>{QElem(1), QElem(1), QElem(0)});
    CHECK_THROWS_AS(X(-1).taylor(2), NegativeExponent);
}

TEST_CASE("taylor of a product is the Cauchy product")
{
    std::mt19937_64 g(5);
    int checked = 0;
    while (checked < 40) {
        RatFunc a = random_rf(g, 13), b = random_rf(g, 13);
        if ((!a.num().is_zero() && a.num().low() < 0) || (!b.num().is_zero() && b.num().low() < 0))
            continue;
        ++checked;
        const int K = 6;
        auto ta = a.taylor(K), tb = b.taylor(K), tab = (a * b).taylor(K);
        for (int k = 0; k <= K; ++k) {
            QElem acc;
            for (int i = 0; i <= k; ++i)
                acc += ta[static_cast<std::size_t>(i)] * tb[static_cast<std::size_t>(k - i)];
            CHECK(acc == tab[static_cast<std::size_t>(k)]);
        }
    }
}

TEST_CASE("JSON round trip")
{
    std::mt19937_64 g(9);
    for (int t = 0; t < 30; ++t) {
        RatFunc a = random_rf(g, -7);
        json j = ratfunc_to_json(a, 7, -7);
        CHECK(ratfunc_from_json(j) == a);
        CHECK(ratfunc_from_json(json::parse(j.dump())) == a);
    }
    json bad = {{"num", {{"x", {"1", "0"}}}}, {"den", json::object()}, {"p", 3}, {"d", 3}};
    CHECK_THROWS_AS(ratfunc_from_json(bad), ParseError);
}

TEST_CASE("rationality assertion")
{
    RatFunc r = RatFunc::monomial(QElem::sqrt_d(3), 1);
    CHECK_FALSE(r.all_rational());
    CHECK_THROWS_AS(r.require_rational("test"), NotInField);
    CHECK_NOTHROW(RatFunc(4).require_rational("test"));
}
