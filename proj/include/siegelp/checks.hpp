#pragma once

// Exact identity checks on the series engine and the grids they run over.

#include "siegelp/sseries.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace siegelp {

struct CheckResult {
    bool ok = true;
    std::string diff;
};

/// reflect(F^{(n-nu)}) = sign p^{-(n+1)k/2} X^{-k} F^{(nu)}.
CheckResult check_functional_equation(const SeriesEngine& eng, const DiagonalForm& N, int nu);
/// S^{(nu)}(pN) = p^{n(n+1)/2 - nu(nu+1)/2} X^{n-nu} S^{(nu)}(N).
CheckResult check_scaling(const SeriesEngine& eng, const DiagonalForm& N, int nu);
/// S(N') - S(N) = H(N) S_{n-1}(N_0) with N' = N with u_n raised by 2, for the
/// characteristic family or the cusp family.
CheckResult check_inductive_relation(const SeriesEngine& eng, const DiagonalForm& N, int nu, bool cusp);

/// All sorted diagonal forms of size n with exponents in [0, max_exp] and
/// units in {1, least non-residue}.
std::vector<DiagonalForm> diagonal_grid(const Prime& p, int n, int max_exp);

struct CaseFailure {
    std::string where;
    std::string diff;
};

struct SuiteReport {
    SuiteReport(std::string n = {}) : name(std::move(n)) {}

    std::string name;
    std::size_t cases = 0;
    std::vector<CaseFailure> failures;
    double seconds = 0;

    bool ok() const { return failures.empty(); }
    void fail(std::string where, std::string diff) { failures.push_back({std::move(where), std::move(diff)}); }
};

struct GridConfig {
    int max_n = 4;
    std::vector<long> primes{3, 5};
    int max_exp = 2;
    std::vector<Character> characters{Character::trivial, Character::quadratic};
    std::uint64_t seed = 20240531;
};

SuiteReport suite_functional_equation(const GridConfig& cfg);
SuiteReport suite_scaling(const GridConfig& cfg);
/// Both the characteristic and the cusp family.
SuiteReport suite_inductive(const GridConfig& cfg);
/// B C = I and closed b = inductive b.
SuiteReport suite_matrix(const GridConfig& cfg);
/// Summation lemmas on `samples` random rational points per r <= max_n.
SuiteReport suite_lemmas(const GridConfig& cfg, int samples = 50);
/// Two independent S^{(0)} paths and S = beta F.
SuiteReport suite_consistency(const GridConfig& cfg);

struct GoldenConfig {
    std::vector<long> degree1_primes{3, 5, 7, 11};
    int degree1_max_m = 4;
    std::vector<long> degree2_primes{3, 5};
    int degree2_max = 3;
    std::vector<long> degree3_primes{3, 5};
    int degree3_max = 2;
};

SuiteReport suite_golden_degree1(const GoldenConfig& cfg);
SuiteReport suite_golden_degree2(const GoldenConfig& cfg);
SuiteReport suite_golden_degree3(const GoldenConfig& cfg);

/// Every trivial-character engine output (S, beta, F, cusp) on the grid has
/// no sqrt(d) component.
SuiteReport suite_rationality(const GridConfig& cfg);

std::string format_report(const SuiteReport& r, std::size_t max_failures = 20);

} // namespace siegelp
