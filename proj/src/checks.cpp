#include "siegelp/checks.hpp"

#include "siegelp/errors.hpp"
#include "siegelp/golden.hpp"

#include <chrono>
#include <random>
#include <sstream>

namespace siegelp {

namespace {

std::string mismatch(const RatFunc& lhs, const RatFunc& rhs)
{
    return "lhs = " + lhs.to_string() + "\n  rhs = " + rhs.to_string();
}

std::string where(const SeriesEngine& eng, const DiagonalForm& N, int nu)
{
    std::ostringstream os;
    os << "p=" << eng.prime().value() << " " << to_string(eng.character()) << " N=" << N.to_string() << " nu=" << nu;
    return os.str();
}

class Timer {
public:
    explicit Timer(SuiteReport& r) : r_(r), t0_(std::chrono::steady_clock::now()) {}
    ~Timer() { r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count(); }

private:
    SuiteReport& r_;
    std::chrono::steady_clock::time_point t0_;
};

template <class F>
void guarded(SuiteReport& rep, const std::string& at, F&& body)
{
    ++rep.cases;
    try {
        body();
    } catch (const Error& e) {
        rep.fail(at, std::string("error: ") + e.what());
    }
}

template <class F>
void for_each_case(const GridConfig& cfg, F&& f)
{
    for (long pv : cfg.primes) {
        Prime p(pv);
        for (Character psi : cfg.characters) {
            SeriesEngine eng(p, psi);
            for (int n = 1; n <= cfg.max_n; ++n)
                for (const auto& N : diagonal_grid(p, n, cfg.max_exp))
                    f(eng, N);
        }
    }
}

RatFunc series(const SeriesEngine& eng, const DiagonalForm& N, int nu, bool cusp)
{
    if (nu > N.size())
        return RatFunc();
    return cusp ? eng.cusp(N, nu) : eng.characteristic(N, nu);
}

} // namespace

CheckResult check_functional_equation(const SeriesEngine& eng, const DiagonalForm& N, int nu)
{
    const int n = N.size();
    const LocalData L = local_data(N, eng.prime());
    const RatFunc F_nu = eng.characteristic(N, nu) / eng.beta_factor(n, nu, L);
    const RatFunc F_dual = eng.characteristic(N, n - nu) / eng.beta_factor(n, n - nu, L);
    const RatFunc lhs = F_dual.reflect_s(eng.prime().value(), n);
    const RatFunc rhs = eng.fe_factor(N) * F_nu;
    if (lhs == rhs)
        return {};
    return {false, mismatch(lhs, rhs)};
}

CheckResult check_scaling(const SeriesEngine& eng, const DiagonalForm& N, int nu)
{
    const int n = N.size();
    const RatFunc lhs = eng.characteristic(N.scaled(1), nu);
    const RatFunc factor =
        RatFunc::monomial(QElem(rat_pow(eng.prime().value(), n * (n + 1) / 2 - nu * (nu + 1) / 2)), n - nu);
    const RatFunc rhs = factor * eng.characteristic(N, nu);
    if (lhs == rhs)
        return {};
    return {false, mismatch(lhs, rhs)};
}

CheckResult check_inductive_relation(const SeriesEngine& eng, const DiagonalForm& N, int nu, bool cusp)
{
    const int n = N.size();
    const DiagonalForm N0 = N.prefix(n - 1);
    const RatFunc lhs = series(eng, N.bump_last(2), nu, cusp) - series(eng, N, nu, cusp);
    const RatFunc rhs = eng.h_factor(N) * series(eng, N0, nu, cusp);
    if (lhs == rhs)
        return {};
    return {false, mismatch(lhs, rhs)};
}

std::vector<DiagonalForm> diagonal_grid(const Prime& p, int n, int max_exp)
{
    // non-decreasing sequences over the 2 (max_exp + 1) (exponent, class) slots
    const int slots = 2 * (max_exp + 1);
    std::vector<DiagonalForm> out;
    std::vector<int> pick(static_cast<std::size_t>(n), 0);
    for (;;) {
        std::vector<Int> units;
        std::vector<int> exps;
        for (int s : pick) {
            exps.push_back(s / 2);
            units.push_back(s % 2 == 0 ? Int(1) : Int(p.nonresidue()));
        }
        out.push_back(make_diagonal(p, units, exps));
        int i = n - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == slots - 1)
            --i;
        if (i < 0)
            break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(i)];
    }
    return out;
}

SuiteReport suite_functional_equation(const GridConfig& cfg)
{
    SuiteReport rep{"functional equation"};
    Timer t(rep);
    for_each_case(cfg, [&](const SeriesEngine& eng, const DiagonalForm& N) {
        for (int nu = 0; nu <= N.size(); ++nu)
            guarded(rep, where(eng, N, nu), [&] {
                auto r = check_functional_equation(eng, N, nu);
                if (!r.ok)
                    rep.fail(where(eng, N, nu), r.diff);
            });
    });
    return rep;
}

SuiteReport suite_scaling(const GridConfig& cfg)
{
    SuiteReport rep{"scaling"};
    Timer t(rep);
    for_each_case(cfg, [&](const SeriesEngine& eng, const DiagonalForm& N) {
        for (int nu = 0; nu <= N.size(); ++nu)
            guarded(rep, where(eng, N, nu), [&] {
                auto r = check_scaling(eng, N, nu);
                if (!r.ok)
                    rep.fail(where(eng, N, nu), r.diff);
            });
    });
    return rep;
}

SuiteReport suite_inductive(const GridConfig& cfg)
{
    SuiteReport rep{"inductive relation"};
    Timer t(rep);
    for_each_case(cfg, [&](const SeriesEngine& eng, const DiagonalForm& N) {
        for (int nu = 0; nu <= N.size(); ++nu)
            for (bool cusp : {false, true}) {
                const std::string at = where(eng, N, nu) + (cusp ? " cusp" : " characteristic");
                guarded(rep, at, [&] {
                    auto r = check_inductive_relation(eng, N, nu, cusp);
                    if (!r.ok)
                        rep.fail(at, r.diff);
                });
            }
    });
    return rep;
}

SuiteReport suite_matrix(const GridConfig& cfg)
{
    SuiteReport rep{"base change matrices"};
    Timer t(rep);
    for (long pv : cfg.primes) {
        Prime p(pv);
        for (Character psi : cfg.characters) {
            CuspMix mix(p, psi);
            for (int n = 0; n <= cfg.max_n; ++n) {
                std::ostringstream at;
                at << "p=" << pv << " " << to_string(psi) << " n=" << n;
                guarded(rep, at.str(), [&] {
                    const RatMatrixFn B = mix.b_matrix(n, true);
                    const RatMatrixFn Bi = mix.b_matrix(n, false);
                    const RatMatrixFn BC = matrix_product(B, mix.c_matrix(n));
                    for (int i = 0; i <= n; ++i)
                        for (int j = 0; j <= n; ++j) {
                            const auto ui = static_cast<std::size_t>(i);
                            const auto uj = static_cast<std::size_t>(j);
                            if (!(B[ui][uj] == Bi[ui][uj]))
                                rep.fail(at.str() + " b(" + std::to_string(i) + "," + std::to_string(j) + ")",
                                         mismatch(B[ui][uj], Bi[ui][uj]));
                            if (!(BC[ui][uj] == RatFunc(i == j ? 1 : 0)))
                                rep.fail(at.str() + " (BC)(" + std::to_string(i) + "," + std::to_string(j) + ")",
                                         BC[ui][uj].to_string());
                        }
                });
            }
        }
    }
    return rep;
}

SuiteReport suite_lemmas(const GridConfig& cfg, int samples)
{
    SuiteReport rep{"summation lemmas"};
    Timer t(rep);
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 17);
    auto rnd = [&] {
        Rat x(num(rng), den(rng));
        x.canonicalize();
        return x;
    };
    for (int r = 1; r <= cfg.max_n; ++r) {
        int done = 0, tries = 0;
        while (done < samples && tries < 100 * samples) {
            ++tries;
            const Rat x = rnd(), y = rnd();
            std::ostringstream at;
            at << "r=" << r << " x=" << x << " y=" << y;
            try {
                const Rat a = lemma_sum_A(x, y, r);
                const Rat b = lemma_sum_B(x, y, r);
                ++rep.cases;
                ++done;
                if (a != -1)
                    rep.fail(at.str() + " A", "sum = " + a.get_str());
                Rat yr = 1;
                for (int k = 0; k < r; ++k)
                    yr *= y;
                if (b != yr - 1)
                    rep.fail(at.str() + " B", "sum = " + b.get_str());
            } catch (const PoleAtSample&) {
                // resample
            }
        }
        if (done < samples)
            rep.fail("r=" + std::to_string(r), "too few pole-free samples");
    }
    return rep;
}

SuiteReport suite_consistency(const GridConfig& cfg)
{
    SuiteReport rep{"S^(0) paths and S = beta F"};
    Timer t(rep);
    for_each_case(cfg, [&](const SeriesEngine& eng, const DiagonalForm& N) {
        guarded(rep, where(eng, N, 0), [&] {
            const RatFunc a = eng.s0_closed(N);
            const RatFunc b = eng.s0_recursive(N);
            const RatFunc c = eng.s0_via_reflection(N);
            if (!(a == b))
                rep.fail(where(eng, N, 0) + " closed vs recursion", mismatch(a, b));
            if (!(a == c))
                rep.fail(where(eng, N, 0) + " closed vs reflection", mismatch(a, c));
            for (int nu = 0; nu <= N.size(); ++nu) {
                const SeriesValue v = eng.characteristic_value(N, nu);
                if (!(v.S == v.beta * v.F))
                    rep.fail(where(eng, N, nu) + " S = beta F", mismatch(v.S, v.beta * v.F));
            }
        });
    });
    return rep;
}

SuiteReport suite_golden_degree1(const GoldenConfig& cfg)
{
    SuiteReport rep{"golden degree 1"};
    Timer t(rep);
    for (long pv : cfg.degree1_primes) {
        Prime p(pv);
        SeriesEngine eng(p, Character::quadratic);
        for (Int alpha : {Int(1), Int(p.nonresidue())})
            for (int m = 0; m <= cfg.degree1_max_m; ++m) {
                const DiagonalForm N = make_diagonal(p, {alpha}, {m});
                guarded(rep, where(eng, N, 0), [&] {
                    const RatFunc g0 = golden::degree1_w0(p, alpha, m);
                    if (!(eng.cusp(N, 0) == g0))
                        rep.fail(where(eng, N, 0) + " w_0", mismatch(eng.cusp(N, 0), g0));
                    if (!(eng.characteristic(N, 0) == g0))
                        rep.fail(where(eng, N, 0) + " (0)", mismatch(eng.characteristic(N, 0), g0));
                    const RatFunc g1 = golden::degree1_w1(p);
                    if (!(eng.cusp(N, 1) == g1) || !(eng.characteristic(N, 1) == g1))
                        rep.fail(where(eng, N, 1), mismatch(eng.cusp(N, 1), g1));
                });
            }
    }
    return rep;
}

SuiteReport suite_golden_degree2(const GoldenConfig& cfg)
{
    SuiteReport rep{"golden degree 2"};
    Timer t(rep);
    for (long pv : cfg.degree2_primes) {
        Prime p(pv);
        SeriesEngine eng(p, Character::quadratic);
        const std::vector<Int> cls{Int(1), Int(p.nonresidue())};
        for (const Int& a : cls)
            for (const Int& b : cls)
                for (int m = 0; m <= cfg.degree2_max; ++m)
                    for (int r = 0; r <= cfg.degree2_max; ++r) {
                        const DiagonalForm N = make_diagonal(p, {a, b}, {m, m + r});
                        guarded(rep, where(eng, N, 1), [&] {
                            const RatFunc g = golden::degree2_nu1(p, a, b, m, r);
                            const RatFunc e = eng.characteristic(N, 1);
                            if (!(e == g))
                                rep.fail(where(eng, N, 1), mismatch(e, g));
                            if (!(eng.cusp(N, 1) == g))
                                rep.fail(where(eng, N, 1) + " cusp", mismatch(eng.cusp(N, 1), g));
                        });
                    }
    }
    return rep;
}

SuiteReport suite_golden_degree3(const GoldenConfig& cfg)
{
    SuiteReport rep{"golden degree 3"};
    Timer t(rep);
    for (long pv : cfg.degree3_primes) {
        Prime p(pv);
        SeriesEngine eng(p, Character::quadratic);
        const std::vector<Int> cls{Int(1), Int(p.nonresidue())};
        for (const Int& a : cls)
            for (const Int& b : cls)
                for (const Int& c : cls)
                    for (int m = 0; m <= cfg.degree3_max; ++m)
                        for (int r = 0; r <= cfg.degree3_max; ++r)
                            for (int s = 0; s <= cfg.degree3_max; ++s) {
                                const DiagonalForm N = make_diagonal(p, {a, b, c}, {m, m + r, m + r + s});
                                std::ostringstream at;
                                at << where(eng, N, 0) << " units=(" << a << "," << b << "," << c << ")";
                                guarded(rep, at.str(), [&] {
                                    const RatFunc g = golden::degree3_w0(p, a, b, c, m, r, s);
                                    const RatFunc e = eng.cusp(N, 0);
                                    if (!(e == g))
                                        rep.fail(at.str(), mismatch(e, g));
                                    const RatFunc g2 = golden::degree3_nu2(p, a, b, c, m, r, s);
                                    const RatFunc e2 = eng.characteristic(N, 2);
                                    if (!(e2 == g2))
                                        rep.fail(at.str() + " (2)", mismatch(e2, g2));
                                });
                            }
    }
    return rep;
}

SuiteReport suite_rationality(const GridConfig& cfg)
{
    SuiteReport rep{"trivial character rationality"};
    Timer t(rep);
    GridConfig triv = cfg;
    triv.characters = {Character::trivial};
    for_each_case(triv, [&](const SeriesEngine& eng, const DiagonalForm& N) {
        for (int nu = 0; nu <= N.size(); ++nu)
            guarded(rep, where(eng, N, nu), [&] {
                const SeriesValue v = eng.characteristic_value(N, nu);
                for (const RatFunc* f : {&v.S, &v.beta, &v.F})
                    if (!f->all_rational())
                        rep.fail(where(eng, N, nu), f->to_string());
                const RatFunc c = eng.cusp(N, nu);
                if (!c.all_rational())
                    rep.fail(where(eng, N, nu) + " cusp", c.to_string());
                if (!eng.h_factor(N).all_rational())
                    rep.fail(where(eng, N, nu) + " H", eng.h_factor(N).to_string());
            });
    });
    return rep;
}

std::string format_report(const SuiteReport& r, std::size_t max_failures)
{
    std::ostringstream os;
    os << r.name << ": " << (r.ok() ? "pass" : "FAIL") << " (" << r.cases << " cases, " << r.failures.size()
       << " failures, " << r.seconds << " s)\n";
    for (std::size_t i = 0; i < r.failures.size() && i < max_failures; ++i)
        os << "  " << r.failures[i].where << "\n  " << r.failures[i].diff << "\n";
    return os.str();
}

} // namespace siegelp
