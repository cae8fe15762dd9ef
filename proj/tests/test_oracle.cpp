#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "siegelp/errors.hpp"
#include "siegelp/oracle.hpp"
#include "siegelp/sseries.hpp"

#include <cmath>
#include <cstdlib>
#include <random>

using namespace siegelp;

namespace {

RatSymMatrix diag_r(std::vector<Rat> d)
{
    RatSymMatrix R(d.size(), std::vector<Rat>(d.size(), Rat(0)));
    for (std::size_t i = 0; i < d.size(); ++i)
        R[i][i] = d[i];
    return R;
}

RatSymMatrix random_polar(std::mt19937_64& g, long p, int n)
{
    std::uniform_int_distribution<long> num(0, p * p * p - 1);
    std::uniform_int_distribution<int> e(0, 3);
    RatSymMatrix R(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            Rat r(num(g), Int(int_pow(p, static_cast<unsigned>(e(g)))));
            r.canonicalize();
            R[i][j] = R[j][i] = r;
        }
    return R;
}

// U^t R U with U an integral unimodular matrix.
RatSymMatrix conjugate(const RatSymMatrix& R, const std::vector<std::vector<long>>& U)
{
    const std::size_t n = R.size();
    RatSymMatrix out(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    out[i][j] += Rat(U[a][i] * U[b][j]) * R[a][b];
    return out;
}

HalfIntMatrix unit_form(long a)
{
    return HalfIntMatrix::diagonal({Int(a)});
}

} // namespace

TEST_CASE("stratum examples")
{
    const long p = 5;
    StratumData z = stratum_data(diag_r({0, 0}), p);
    CHECK(z.delta_exponent == 0);
    CHECK(z.polar_rank == 0);
    CHECK(z.nu == 2);

    StratumData a = stratum_data(diag_r({Rat(2, 5), 0}), p);
    CHECK(a.delta_exponent == 1);
    CHECK(a.polar_rank == 1);
    CHECK(a.nu == 1);

    StratumData b = stratum_data(diag_r({Rat(2, 5), Rat(3, 25)}), p);
    CHECK(b.delta_exponent == 3);
    CHECK(b.polar_rank == 2);
    CHECK(b.nu == 0);

    // integral entries are invisible
    StratumData c = stratum_data(diag_r({Rat(7), Rat(11, 5)}), p);
    CHECK(c.delta_exponent == 1);
    CHECK(c.nu == 1);

    CHECK_THROWS_AS(stratum_data(diag_r({Rat(1, 3)}), p), PreconditionError);
}

TEST_CASE("psi tilde examples")
{
    for (long p : {3L, 5L, 7L}) {
        CHECK(psi_tilde(diag_r({0, 0}), p, Character::quadratic) == 1);
        for (long a = 1; a < p; ++a)
            for (int l = 1; l <= 3; ++l) {
                RatSymMatrix R = diag_r({Rat(Int(a), int_pow(p, static_cast<unsigned>(l)))});
                CHECK(psi_tilde(R, p, Character::quadratic) == legendre(Int(a), p));
                CHECK(psi_tilde(R, p, Character::trivial) == 1);
            }
    }
}

TEST_CASE("stratum and psi tilde are unchanged by unimodular conjugation")
{
    std::mt19937_64 g(41);
    const std::vector<std::vector<std::vector<long>>> moves{
        {{1, 1}, {0, 1}}, {{0, 1}, {1, 0}}, {{2, 1}, {1, 1}}, {{-1, 0}, {3, 1}}};
    for (long p : {3L, 5L})
        for (int t = 0; t < 200; ++t) {
            RatSymMatrix R = random_polar(g, p, 2);
            for (const auto& U : moves) {
                RatSymMatrix S = conjugate(R, U);
                StratumData a = stratum_data(R, p), b = stratum_data(S, p);
                CHECK(a.delta_exponent == b.delta_exponent);
                CHECK(a.nu == b.nu);
                CHECK(psi_tilde(R, p, Character::quadratic) == psi_tilde(S, p, Character::quadratic));
            }
        }
}

TEST_CASE("degree one Gauss sum")
{
    for (long pv : {3L, 5L, 7L}) {
        Prime p(pv);
        for (long a : {1L, p.nonresidue()}) {
            OracleSeries s = truncated_series(Character::quadratic, pv, unit_form(a), 0, 4);
            auto g = eps_p_half_power(p, Character::quadratic, 1, 1).embed() * static_cast<double>(legendre(Int(a), pv));
            REQUIRE(s.coeffs.size() == 5);
            CHECK(std::abs(s.coeffs[1] - g) < 1e-9);
            for (int k : {0, 2, 3, 4})
                CHECK(std::abs(s.coeffs[static_cast<std::size_t>(k)]) < 1e-9);
            OracleSeries top = truncated_series(Character::quadratic, pv, unit_form(a), 1, 4);
            CHECK(std::abs(top.coeffs[0] - 1.0) < 1e-12);
            for (std::size_t k = 1; k < top.coeffs.size(); ++k)
                CHECK(std::abs(top.coeffs[k]) < 1e-12);
        }
    }
}

TEST_CASE("degree one trivial character gives Ramanujan sums")
{
    for (long p : {3L, 5L, 7L}) {
        OracleSeries s = truncated_series(Character::trivial, p, unit_form(1), 0, 4);
        CHECK(std::abs(s.coeffs[0]) < 1e-12);
        CHECK(std::abs(s.coeffs[1] + 1.0) < 1e-9);
        for (int k = 2; k <= 4; ++k)
            CHECK(std::abs(s.coeffs[static_cast<std::size_t>(k)]) < 1e-9);
        // N = p^2: c_{p^l}(p^2) is phi(p^l) for l <= 2, -p^2 at l = 3
        OracleSeries t = truncated_series(Character::trivial, p, unit_form(p * p), 0, 3);
        CHECK(std::abs(t.coeffs[1] - double(p - 1)) < 1e-9);
        CHECK(std::abs(t.coeffs[2] - double(p * p - p)) < 1e-9);
        CHECK(std::abs(t.coeffs[3] + double(p * p)) < 1e-9);
    }
}

TEST_CASE("raising the truncation order does not move lower coefficients")
{
    HalfIntMatrix N({{2, 3}, {3, 6}});
    for (Character psi : {Character::trivial, Character::quadratic}) {
        OracleTable small(3, N, 3, default_budget()), big(3, N, 4, default_budget());
        for (int nu = 0; nu <= 2; ++nu) {
            OracleSeries a = small.series(psi, nu), b = big.series(psi, nu);
            for (std::size_t k = 0; k < a.coeffs.size(); ++k)
                CHECK(std::abs(a.coeffs[k] - b.coeffs[k]) < 1e-9);
        }
    }
}

TEST_CASE("trivial character coefficients are real")
{
    HalfIntMatrix N({{2, 1}, {1, 6}});
    OracleTable table(3, N, 4, default_budget());
    for (int nu = 0; nu <= 2; ++nu)
        for (auto c : table.series(Character::trivial, nu).coeffs)
            CHECK(std::abs(c.imag()) < 1e-9);
}

TEST_CASE("strata of the zero matrix partition all R by delta")
{
    // with N = 0 and trivial character every R contributes 1, so summing the
    // strata counts symmetric matrices mod Z_p with given delta
    const long p = 3;
    std::vector<std::vector<Int>> zero(2, std::vector<Int>(2, Int(0)));
    OracleTable table(p, HalfIntMatrix(zero), 3, default_budget());
    std::vector<double> total(4, 0.0);
    for (int nu = 0; nu <= 2; ++nu) {
        auto s = table.series(Character::trivial, nu).coeffs;
        for (std::size_t k = 0; k < total.size(); ++k)
            total[k] += s[k].real();
    }
    CHECK(total[0] == doctest::Approx(1.0));
    // delta = p: exactly the rank one residue matrices mod p
    CHECK(total[1] == doctest::Approx(double((p * p - 1))));
    // delta = p^2: invertible residues mod p (p^3 - p^2), plus X / p^2 with
    // X of rank one mod p and det X = 0 mod p^2 ((p^2 - 1) p^2)
    CHECK(total[2] == doctest::Approx(double(p * p * p - p * p + (p * p - 1) * p * p)));
}

TEST_CASE("engine agrees with the oracle in degree one")
{
    for (long pv : {3L, 5L, 7L})
        for (Character psi : {Character::trivial, Character::quadratic}) {
            SeriesEngine eng(Prime(pv), psi);
            for (long a : {1L, Prime(pv).nonresidue()})
                for (int m = 0; m <= 2; ++m) {
                    DiagonalForm N = make_diagonal(Prime(pv), {a}, {m});
                    OracleTable table(pv, N.matrix(), 5, default_budget());
                    for (int nu = 0; nu <= 1; ++nu) {
                        CompareReport rep = compare(eng.cusp(N, nu), table.series(psi, nu));
                        CHECK_MESSAGE(rep.ok, N.to_string() << " nu=" << nu << " diff=" << rep.max_abs_diff);
                        CHECK(rep.max_imag < 1e-9);
                    }
                }
        }
}

TEST_CASE("enumeration limits")
{
    HalfIntMatrix I3 = HalfIntMatrix::diagonal({1, 1, 1});
    CHECK_THROWS_AS(OracleTable(3, I3, 4, 1000), BudgetExceeded);
    CHECK_THROWS_AS(OracleTable(3, HalfIntMatrix::diagonal({1, 1, 1, 1}), 1, default_budget()), PreconditionError);
    CHECK_THROWS_AS(OracleTable(3, I3, 0, default_budget()), PreconditionError);
    CHECK_THROWS_AS(OracleTable(3, unit_form(1), 20, default_budget()), BudgetExceeded);
    OracleTable t(3, unit_form(1), 2, default_budget());
    CHECK_THROWS_AS(t.series(Character::trivial, 2), PreconditionError);
    CHECK(t.nodes_visited() > 0);

    ::setenv("SIEGELP_BUDGET", "12345", 1);
    CHECK(default_budget() == 12345);
    ::setenv("SIEGELP_BUDGET", "lots", 1);
    CHECK_THROWS_AS(default_budget(), ParseError);
    ::unsetenv("SIEGELP_BUDGET");
}
