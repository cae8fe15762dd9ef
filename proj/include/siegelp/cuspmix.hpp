#pragma once

// Base change between the cusp series S^{w_nu} and the U(p)-eigen
// (characteristic) series S^{(nu)}: S^{(i)} = sum_j b_ij S^{w_j} and
// S^{w_i} = sum_j c_ij S^{(j)}, with B, C upper triangular and B C = I.

#include "siegelp/ratfun.hpp"

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace siegelp {

using RatMatrixFn = std::vector<std::vector<RatFunc>>;

class CuspMix {
public:
    CuspMix(const Prime& p, Character psi) : p_(p), psi_(psi) {}

    const Prime& prime() const noexcept { return p_; }
    Character character() const noexcept { return psi_; }

    /// Coefficient of the U(p) action, p^{si} written as X^{-i}.
    RatFunc m_coeff(int i, int j) const;
    /// b_ij from the defining recursion in j (memoized).
    RatFunc b_coeff_inductive(int i, int j) const;
    RatFunc b_coeff_closed(int i, int j) const;
    RatFunc c_coeff(int i, int j) const;

    /// (n+1) x (n+1) matrices.
    RatMatrixFn b_matrix(int n, bool closed = true) const;
    RatMatrixFn c_matrix(int n) const;

private:
    Prime p_;
    Character psi_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<int, int>, RatFunc> b_memo_;
    mutable std::map<std::pair<int, int>, RatFunc> c_memo_;
};

RatMatrixFn matrix_product(const RatMatrixFn& a, const RatMatrixFn& b);

// Summation identities guarding the closed forms. Both throw PoleAtSample
// when a denominator vanishes at (x, y).

/// sum_{t=1}^r prod_{k=1}^t (x^{k-1}y-1)(x^{r+1-k}-1) / ((x^{r-k}-y)(x^k-1)); equals -1.
Rat lemma_sum_A(const Rat& x, const Rat& y, int r);
/// sum_{t=1}^r prod_{k=1}^t (y-x^{k-1})(x^{r+1-k}-1) / (x^k-1); equals y^r - 1.
Rat lemma_sum_B(const Rat& x, const Rat& y, int r);

} // namespace siegelp
