#pragma once

// Ramified Siegel series of level p as exact rational functions of X = p^{-s}.
//
// S^{(nu)}_n(N) is the U(p)-characteristic series; S^{w_nu}_n(N) the series
// at the cusp w_nu. The characteristic series are computed by peeling the
// largest Jordan component off a diagonal N, anchored at nu = 0 by the closed
// form and at nu = n by the constant 1.

#include "siegelp/cuspmix.hpp"
#include "siegelp/localinv.hpp"
#include "siegelp/ratfun.hpp"

#include <map>
#include <mutex>
#include <string>

namespace siegelp {

struct SeriesValue {
    RatFunc S;
    RatFunc beta;
    RatFunc F;
    LocalData local;
};

class SeriesEngine {
public:
    SeriesEngine(const Prime& p, Character psi);

    const Prime& prime() const noexcept { return p_; }
    Character character() const noexcept { return psi_; }
    long field() const noexcept { return d_; }
    const CuspMix& mix() const noexcept { return mix_; }

    /// eps_p^e p^{k/2} in the field of this engine.
    QElem half_power(int eps_exponent, int half_exponent) const;

    /// Zeta factor beta^{(nu)}_n; requires n >= 1.
    RatFunc beta_factor(int n, int nu, const LocalData& local) const;
    RatFunc s0_closed(const DiagonalForm& N) const;
    /// S^{(0)} from the recursion alone (nu = 0 line all the way down).
    RatFunc s0_recursive(const DiagonalForm& N) const;
    /// S^{(0)} obtained by reflecting F^{(n)} = 1/beta^{(n)}.
    RatFunc s0_via_reflection(const DiagonalForm& N) const;
    /// The H-factor of the recursion; requires n >= 1.
    RatFunc h_factor(const DiagonalForm& N) const;

    RatFunc characteristic(const DiagonalForm& N, int nu) const;
    SeriesValue characteristic_value(const DiagonalForm& N, int nu) const;
    RatFunc cusp(const DiagonalForm& N, int nu) const;

    /// Factor relating F^{(nu)} and the reflection of F^{(n-nu)}:
    /// sign * p^{-(n+1)k/2} X^{-k}.
    RatFunc fe_factor(const DiagonalForm& N) const;

    /// Number of memoized characteristic series.
    std::size_t memo_size() const;

private:
    void check_nu(const DiagonalForm& N, int nu) const;
    void check_rational(const RatFunc& f, const char* what) const;

    Prime p_;
    Character psi_;
    long d_;
    CuspMix mix_;
    mutable std::mutex mu_;
    mutable std::map<std::string, RatFunc> memo_;
};

} // namespace siegelp
