#pragma once

// Brute-force evaluation of the defining sum of the ramified Siegel series:
// sum over symmetric R in Sym_n(Q_p/Z_p) in a fixed stratum of
// psi~(R) delta_p(R)^{-s} e(tr(NR)), truncated at delta_p(R) <= p^L.

#include "siegelp/localinv.hpp"
#include "siegelp/ratfun.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace siegelp {

using RatSymMatrix = std::vector<std::vector<Rat>>;

struct StratumData {
    /// l with delta_p(R) = p^l.
    int delta_exponent = 0;
    /// rank(C mod p) for a coprime symmetric pair (C, D) with R = C^{-1} D.
    int nu = 0;
    /// Number of elementary divisors of R that are not p-integral.
    int polar_rank = 0;
};

StratumData stratum_data(const RatSymMatrix& R, long p);
/// 1 for the trivial character; product of chi_p over the polar Jordan units otherwise.
int psi_tilde(const RatSymMatrix& R, long p, Character psi);

struct OracleSeries {
    std::vector<std::complex<double>> coeffs;
    long p = 0;
    Character psi = Character::trivial;
    int n = 0;
    int nu = 0;
    int L = 0;
};

/// Exact character-sum counts for one (p, N, L): for each stratum nu,
/// delta exponent l <= L and phase t mod p^L, the number of R (trivial) and
/// the signed sum of psi~(R) (quadratic).
class OracleTable {
public:
    OracleTable(long p, const HalfIntMatrix& N, int L, std::uint64_t budget);

    OracleSeries series(Character psi, int nu) const;
    std::uint64_t nodes_visited() const noexcept { return nodes_; }
    int order() const noexcept { return L_; }

private:
    long p_;
    int n_;
    int L_;
    long q_;
    std::vector<std::int64_t> trivial_;
    std::vector<std::int64_t> quadratic_;
    std::uint64_t nodes_ = 0;

    std::size_t index(int nu, int l, long phase) const
    {
        return (static_cast<std::size_t>(nu) * static_cast<std::size_t>(L_ + 1) + static_cast<std::size_t>(l)) *
                   static_cast<std::size_t>(q_) +
               static_cast<std::size_t>(phase);
    }
};

/// Budget from SIEGELP_BUDGET or the built-in default.
std::uint64_t default_budget();

OracleSeries truncated_series(Character psi, long p, const HalfIntMatrix& N, int nu, int L,
                              std::uint64_t budget = default_budget());

struct CompareReport {
    double max_abs_diff = 0;
    std::vector<double> per_order;
    /// Largest imaginary part of an oracle coefficient (trivial character only).
    double max_imag = 0;
    bool ok = false;
};

/// Numerical embedding of a field element: sqrt(d) -> sqrt(d) or i sqrt(-d).
std::vector<std::complex<double>> embed_taylor(const RatFunc& f, int order);

CompareReport compare(const RatFunc& exact, const OracleSeries& oracle, double tol = 1e-9);

} // namespace siegelp
