#pragma once

// Known low-degree closed forms for the quadratic character, written out
// factor by factor from local invariants only (no use of the series engine).

#include "siegelp/localinv.hpp"
#include "siegelp/ratfun.hpp"

namespace siegelp::golden {

/// S^{w_0}_1 = S^{(0)}_1 for N = alpha p^m.
RatFunc degree1_w0(const Prime& p, const Int& alpha, int m);
/// S^{w_1}_1 = S^{(1)}_1 = 1.
RatFunc degree1_w1(const Prime& p);

/// S^{(1)}_2 = S^{w_1}_2 for N = p^m diag(alpha, beta p^r).
RatFunc degree2_nu1(const Prime& p, const Int& alpha, const Int& beta, int m, int r);

/// S^{(2)}_3 for N = p^m diag(alpha, beta p^r, gamma p^{r+t}).
RatFunc degree3_nu2(const Prime& p, const Int& alpha, const Int& beta, const Int& gamma, int m, int r, int t);
/// S^{w_0}_3 for the same N.
RatFunc degree3_w0(const Prime& p, const Int& alpha, const Int& beta, const Int& gamma, int m, int r, int t);

} // namespace siegelp::golden
