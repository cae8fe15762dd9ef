#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "siegelp/errors.hpp"
#include "siegelp/localinv.hpp"

#include <random>
#include <set>

using namespace siegelp;

namespace {

// Integer representative of the Q_p square class of a with ord_p in {0, 1}.
long class_rep(Rat a, long p, long mod)
{
    int v = ord_p(a, p);
    Rat u = unit_part(a, p);
    // replace the unit by an integer congruent to it mod p^3
    Int num = u.get_num(), den = u.get_den();
    Int m(mod), inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
    Int r = num * inv;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    long rep = r.get_si();
    if (v % 2 != 0)
        rep = rep * p % mod;
    return rep;
}

// z^2 = a x^2 + b y^2 has a primitive solution mod p^3.
int hilbert_by_search(const Rat& a, const Rat& b, long p)
{
    const long q = p * p * p;
    long A = class_rep(a, p, q), B = class_rep(b, p, q);
    std::vector<bool> unit_sq(static_cast<std::size_t>(q), false), any_sq(static_cast<std::size_t>(q), false);
    for (long z = 0; z < q; ++z) {
        long s = z * z % q;
        any_sq[static_cast<std::size_t>(s)] = true;
        if (z % p != 0)
            unit_sq[static_cast<std::size_t>(s)] = true;
    }
    for (long x = 0; x < q; ++x)
        for (long y = 0; y < q; ++y) {
            long v = (A * (x * x % q) + B * (y * y % q)) % q;
            bool primitive_xy = x % p != 0 || y % p != 0;
            if (primitive_xy ? any_sq[static_cast<std::size_t>(v)] : unit_sq[static_cast<std::size_t>(v)])
                return 1;
        }
    return -1;
}

HalfIntMatrix random_form(std::mt19937_64& g, int n)
{
    std::uniform_int_distribution<long> d(-20, 20), o(-6, 6);
    for (;;) {
        std::vector<std::vector<Int>> G(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n)));
        for (int i = 0; i < n; ++i) {
            G[i][i] = 2 * d(g);
            for (int j = 0; j < i; ++j)
                G[i][j] = G[j][i] = o(g);
        }
        HalfIntMatrix N(G);
        if (N.det() != 0)
            return N;
    }
}

// U^t G U for a random unimodular U built from elementary moves and swaps.
HalfIntMatrix random_equivalent(std::mt19937_64& g, const HalfIntMatrix& N)
{
    const auto n = static_cast<std::size_t>(N.size());
    std::vector<std::vector<Int>> U(n, std::vector<Int>(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i)
        U[i][i] = 1;
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<long> c(-3, 3);
    for (int t = 0; t < 8; ++t) {
        std::size_t i = idx(g), j = idx(g);
        if (i == j) {
            for (auto& row : U)
                row[i] = -row[i];
            continue;
        }
        long k = c(g);
        for (auto& row : U)
            row[i] += k * row[j];
        if (t % 3 == 0)
            for (auto& row : U)
                std::swap(row[i], row[j]);
    }
    std::vector<std::vector<Int>> out(n, std::vector<Int>(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    out[i][j] += U[a][i] * N.G[a][b] * U[b][j];
    return HalfIntMatrix(out);
}

bool same_p_invariants(const LocalData& a, const LocalData& b)
{
    return a.d_p == b.d_p && a.a_N == b.a_N && a.e_p == b.e_p && a.zeta_p == b.zeta_p && a.eta_p == b.eta_p &&
           a.chiN_p == b.chiN_p && a.chiNstar_p == b.chiNstar_p && a.hasse == b.hasse;
}

} // namespace

TEST_CASE("hilbert symbol examples")
{
    CHECK(hilbert_symbol(1, 7, 5) == 1);
    CHECK(hilbert_symbol(2, 3, 5) == 1);
    for (long p : {3L, 5L, 7L, 11L})
        for (long u = 1; u < p; ++u)
            CHECK(hilbert_symbol(Rat(p), Rat(u), p) == legendre(Int(u), p));
}

TEST_CASE("hilbert symbol agrees with conic solvability mod p^3")
{
    std::mt19937_64 g(17);
    std::uniform_int_distribution<long> num(-60, 60), den(1, 30);
    for (long p : {3L, 5L, 7L}) {
        for (int t = 0; t < 25; ++t) {
            Rat a(num(g), den(g)), b(num(g), den(g));
            a.canonicalize();
            b.canonicalize();
            if (a == 0 || b == 0)
                continue;
            CHECK_MESSAGE(hilbert_symbol(a, b, p) == hilbert_by_search(a, b, p),
                          "a=" << a.get_str() << " b=" << b.get_str() << " p=" << p);
        }
        CHECK(hilbert_symbol(p, p, p) == hilbert_by_search(p, p, p));
    }
}

TEST_CASE("diagonalize over Q")
{
    CHECK(diagonalize_over_Q(HalfIntMatrix::diagonal({2, 3})) == std::vector<Rat>{2, 3});
    CHECK(diagonalize_over_Q(HalfIntMatrix::diagonal({1, 1, 1})) == std::vector<Rat>{1, 1, 1});
    HalfIntMatrix H({{0, 1}, {1, 0}});
    auto d = diagonalize_over_Q(H);
    REQUIRE(d.size() == 2);
    // det -1/4 up to squares, and the hyperbolic plane is isotropic everywhere
    Rat ratio = d[0] * d[1] / H.det();
    CHECK(mpz_perfect_square_p(ratio.get_num().get_mpz_t()));
    CHECK(mpz_perfect_square_p(ratio.get_den().get_mpz_t()));
    for (long p : {3L, 5L, 7L})
        CHECK(hilbert_symbol(-d[0] * d[1], Rat(1), p) == 1);
    CHECK_THROWS_AS(diagonalize_over_Q(HalfIntMatrix({{2, 2}, {2, 2}})), SingularMatrix);
}

TEST_CASE("hasse invariant examples")
{
    for (long p : {3L, 5L, 7L, 13L}) {
        CHECK(hasse_invariant(HalfIntMatrix::diagonal({1, 1, 1, 1}), p) == 1);
        CHECK(hasse_invariant(HalfIntMatrix::diagonal({1, 1, Int(p - 1)}), p) == 1);
        CHECK(hasse_invariant(HalfIntMatrix::diagonal({Int(p), Int(p)}), p) == legendre(Int(-1), p));
        CHECK(hasse_invariant(HalfIntMatrix::diagonal({Int(p), Int(p)}), p) == hilbert_by_search(p, p, p));
    }
}

TEST_CASE("local invariants are unchanged by unimodular change of basis")
{
    std::mt19937_64 g(23);
    for (long pv : {3L, 5L, 7L}) {
        Prime p(pv);
        for (int n = 1; n <= 4; ++n)
            for (int t = 0; t < 20; ++t) {
                HalfIntMatrix N = random_form(g, n);
                HalfIntMatrix M = random_equivalent(g, N);
                CHECK(hasse_invariant(N, pv) == hasse_invariant(M, pv));
                CHECK(local_data(N, p) == local_data(M, p));
                // the Jordan form is Z_p-equivalent, so every p-local invariant survives
                CHECK(same_p_invariants(local_data(N, p), local_data(jordan_diagonalize_Zp(M, p), p)));
            }
    }
}

TEST_CASE("zeta_p examples")
{
    for (long p : {3L, 5L, 7L}) {
        CHECK(zeta_p_of(HalfIntMatrix::diagonal({1, Int(p)}), p) == 1);
        CHECK(zeta_p_of(HalfIntMatrix::diagonal({Int(p), Int(p), 2, Int(p * p)}), p) == 1);
        CHECK(zeta_p_of(HalfIntMatrix::diagonal({2}), p) == 1);
        // h_p = (p,p)_p and the determinant symbol (p,p)_p cancel it
        CHECK(zeta_p_of(HalfIntMatrix::diagonal({Int(p)}), p) == 1);
        CHECK(hasse_invariant(HalfIntMatrix::diagonal({Int(p)}), p) == legendre(Int(-1), p));
    }
}

TEST_CASE("the (-1,-1)_p factor of zeta_p is trivial at odd p")
{
    std::mt19937_64 g(29);
    for (long p : {3L, 5L, 7L, 11L})
        for (int n = 1; n <= 5; ++n)
            for (int t = 0; t < 10; ++t) {
                HalfIntMatrix N = random_form(g, n);
                CHECK(zeta_p_of(N, p, true) == zeta_p_of(N, p, false));
            }
}

TEST_CASE("fundamental discriminant examples")
{
    CHECK(fundamental_discriminant(9) == 1);
    CHECK(fundamental_discriminant(-4) == -4);
    CHECK(fundamental_discriminant(5) == 5);
    CHECK(fundamental_discriminant(-1) == -4);
    CHECK(fundamental_discriminant(12) == 12);
    CHECK(fundamental_discriminant(Rat(-3, 4)) == -3);
}

TEST_CASE("local data examples")
{
    LocalData a = local_data(HalfIntMatrix::diagonal({1}), Prime(5));
    CHECK(a.D_N == 1);
    CHECK(a.d_p == 0);
    CHECK(a.a_N == 1);
    CHECK(a.e_p == 0);
    CHECK(a.zeta_p == 1);
    CHECK(a.eta_p == 1);
    CHECK(a.chiN_p == 0);
    CHECK(a.chiNstar_p == 0);

    LocalData b = local_data(HalfIntMatrix::diagonal({1, 1}), Prime(5));
    CHECK(b.D_N == -4);
    CHECK(b.fund_disc == -4);
    CHECK(b.d_p == 0);
    CHECK(b.a_N == 0);
    CHECK(b.e_p == 0);
    CHECK(b.chiN_p == 1);
    CHECK(b.fund_disc_star == -20);
    CHECK(b.chiNstar_p == 0);

    LocalData c = local_data(HalfIntMatrix::diagonal({1, 3}), Prime(3));
    CHECK(c.D_N == -12);
    CHECK(c.fund_disc == -3);
    CHECK(c.d_p == 1);
    CHECK(c.a_N == 1);
    CHECK(c.e_p == 0);
    CHECK(c.chiN_p == 0);
    // d* = d / p
    CHECK(c.fund_disc_star == -1);
    CHECK(c.chiNstar_p == 1);

    CHECK_THROWS_AS(local_data(HalfIntMatrix({{2, 2}, {2, 2}}), Prime(3)), SingularMatrix);
}

TEST_CASE("e_p parity and a_N on a grid")
{
    for (long pv : {3L, 5L})
        for (int n = 1; n <= 4; ++n)
            for (long u1 : {1L, 2L})
                for (int e1 = 0; e1 <= 3; ++e1)
                    for (int e2 = 0; e2 <= 3; ++e2) {
                        std::vector<Int> units(static_cast<std::size_t>(n), Int(1));
                        std::vector<int> exps(static_cast<std::size_t>(n), 0);
                        units[0] = u1;
                        exps[0] = e1;
                        exps[static_cast<std::size_t>(n - 1)] = e2;
                        LocalData L = local_data(make_diagonal(Prime(pv), units, exps), Prime(pv));
                        if (n % 2 == 0) {
                            CHECK(L.e_p % 2 == 0);
                            CHECK(L.a_N == L.d_p % 2);
                            CHECK(L.eta_p == 1);
                        } else {
                            CHECK(L.a_N == 1);
                            CHECK(L.e_p == L.d_p);
                            CHECK(L.chiN_p == 0);
                            CHECK(L.chiNstar_p == 0);
                        }
                    }
}

TEST_CASE("jordan decomposition examples")
{
    Prime p(7);
    DiagonalForm a = jordan_diagonalize_Zp(HalfIntMatrix::diagonal({2, 21}), p);
    CHECK(a.exponents == std::vector<int>{0, 1});
    CHECK(a.units == std::vector<long>{1, 3});
    CHECK(a.twist == 1);

    DiagonalForm b = jordan_diagonalize_Zp(HalfIntMatrix::diagonal({21, 2}), p);
    CHECK(b == a);
    CHECK(b.twist == legendre(Int(-1), 7));

    DiagonalForm h = jordan_diagonalize_Zp(HalfIntMatrix({{0, 1}, {1, 0}}), p);
    CHECK(h.exponents == std::vector<int>{0, 0});
    // unit product is -1/4 up to squares
    CHECK(legendre(Int(h.units[0] * h.units[1]), 7) == legendre(Int(-1), 7));
    CHECK_THROWS_AS(jordan_diagonalize_Zp(HalfIntMatrix({{2, 2}, {2, 2}}), p), SingularMatrix);
}

TEST_CASE("make_diagonal sorts by exponent and canonicalizes units")
{
    DiagonalForm f = make_diagonal(Prime(5), {3, 4, 2}, {2, 0, 0});
    CHECK(f.exponents == std::vector<int>{0, 0, 2});
    CHECK(f.units == std::vector<long>{1, 2, 2});
    CHECK(f.scaled(1).exponents == std::vector<int>{1, 1, 3});
    CHECK(f.prefix(2).size() == 2);
    CHECK(f.bump_last(2).exponents.back() == 4);
    CHECK_THROWS_AS(make_diagonal(Prime(5), {5}, {0}), PreconditionError);
}
