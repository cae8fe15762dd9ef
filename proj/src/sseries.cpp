#include "siegelp/sseries.hpp"

#include "siegelp/errors.hpp"

namespace siegelp {

namespace {

// 1 - c p^{e} X^{m}; e may be negative.
RatFunc om(long p, int pexp, int xexp, int c = 1)
{
    if (c == 0)
        return RatFunc(1);
    return RatFunc::one_minus(QElem(Rat(c) * rat_pow(p, pexp)), xexp);
}

} // namespace

SeriesEngine::SeriesEngine(const Prime& p, Character psi)
    : p_(p), psi_(psi), d_(field_context(p, psi)), mix_(p, psi)
{
}

QElem SeriesEngine::half_power(int eps_exponent, int half_exponent) const
{
    return eps_p_half_power(p_, psi_, eps_exponent, half_exponent);
}

void SeriesEngine::check_nu(const DiagonalForm& N, int nu) const
{
    if (nu < 0 || nu > N.size())
        throw PreconditionError("nu = " + std::to_string(nu) + " outside [0, " + std::to_string(N.size()) + "]");
    if (N.p != p_.value())
        throw PreconditionError("diagonal form built for a different prime");
}

void SeriesEngine::check_rational(const RatFunc& f, const char* what) const
{
    if (psi_ == Character::trivial)
        f.require_rational(what);
}

RatFunc SeriesEngine::beta_factor(int n, int nu, const LocalData& local) const
{
    if (n < 1)
        throw PreconditionError("zeta factor needs n >= 1");
    if (nu < 0 || nu > n)
        throw PreconditionError("nu outside [0, n]");
    const long p = p_.value();
    RatFunc r(1);
    for (int i = 1; i <= nu / 2; ++i)
        r *= om(p, 2 * nu + 1 - 2 * i, 2);
    for (int i = nu / 2 + 1; i <= n / 2; ++i)
        r *= om(p, 2 * i, 2);
    if (psi_ == Character::trivial) {
        r *= om(p, nu, 1);
        if (n % 2 == 0)
            r /= om(p, n / 2, 1, local.chiN_p);
        return r;
    }
    r *= RatFunc(half_power(-nu, nu));
    if (n % 2 == 0)
        r /= om(p, n / 2, 1, local.chiNstar_p);
    return r;
}

RatFunc SeriesEngine::s0_closed(const DiagonalForm& N) const
{
    const int n = N.size();
    if (n == 0)
        return RatFunc(1);
    const long p = p_.value();
    const LocalData L = local_data(N, p_);
    RatFunc prod_num(1), prod_den(1);
    for (int i = 1; i <= n / 2; ++i) {
        prod_num *= om(p, 2 * i, 2);
        prod_den *= om(p, -2 * i - 1, -2);
    }
    RatFunc out;
    if (psi_ == Character::trivial) {
        const int e = L.e_p;
        // chi_N(p) vanishes for odd n, so p^{n/2} only appears for even n
        const int chi = n % 2 == 0 ? L.chiN_p : 0;
        RatFunc num = RatFunc::monomial(QElem(Rat(L.zeta_p) * rat_pow(p, (n + 1) * e / 2)), e) * om(p, 0, 1) *
                      prod_num;
        RatFunc den = om(p, -1, -1) * prod_den;
        if (chi != 0) {
            num *= om(p, -n / 2 - 1, -1, chi);
            den *= om(p, n / 2, 1, chi);
        }
        out = num / den;
    } else {
        const int k = L.d_p + L.a_N;
        const int chis = n % 2 == 0 ? L.chiNstar_p : 0;
        RatFunc num = RatFunc::monomial(half_power(n, (n + 1) * k - n) * QElem(L.eta_p), k) * prod_num;
        RatFunc den = prod_den;
        if (chis != 0) {
            num *= om(p, -n / 2 - 1, -1, chis);
            den *= om(p, n / 2, 1, chis);
        }
        out = num / den;
    }
    check_rational(out, "S^(0)");
    return out;
}

RatFunc SeriesEngine::h_factor(const DiagonalForm& N) const
{
    const int n = N.size();
    if (n < 1)
        throw PreconditionError("H-factor needs n >= 1");
    const long p = p_.value();
    const LocalData L = local_data(N, p_);
    const LocalData L0 = local_data(N.prefix(n - 1), p_);
    const int un = N.exponents.back();
    RatFunc out;
    if (psi_ == Character::trivial) {
        if (n % 2 == 0) {
            const int k = un - L.a_N + 2;
            const int K = L0.d_p + (n + 1) * k;
            QElem c = half_power(0, K) * QElem(L0.zeta_p);
            out = RatFunc::monomial(c, k) * om(p, n, 2) * om(p, -n / 2 - 1, -1, L.chiN_p) /
                  om(p, n / 2, 1, L.chiN_p);
        } else {
            const int k = un - L0.a_N + 2;
            const int K = L.d_p + n * k;
            QElem c = half_power(0, K) * QElem(-L.zeta_p);
            out = RatFunc::monomial(c, k) * om(p, n + 1, 2) * om(p, -(n - 1) / 2, -1, L0.chiN_p) /
                  om(p, (n + 1) / 2, 1, L0.chiN_p);
        }
        check_rational(out, "H");
        return out;
    }
    if (n % 2 == 0) {
        const int k = un + L.a_N + 1;
        const int K = L0.d_p + (n + 1) * k;
        QElem c = half_power(1, K) * QElem(L0.eta_p);
        out = RatFunc::monomial(c, k) * om(p, n, 2) * om(p, -n / 2 - 1, -1, L.chiNstar_p) /
              om(p, n / 2, 1, L.chiNstar_p);
    } else {
        const int k = un + L0.a_N + 1;
        const int K = L.d_p + n * k;
        QElem c = half_power(1, K) * QElem(-L.eta_p);
        out = RatFunc::monomial(c, k) * om(p, n + 1, 2) * om(p, -(n - 1) / 2, -1, L0.chiNstar_p) /
              om(p, (n + 1) / 2, 1, L0.chiNstar_p);
    }
    return out;
}

RatFunc SeriesEngine::s0_recursive(const DiagonalForm& N) const
{
    const int n = N.size();
    if (n == 0)
        return RatFunc(1);
    const long p = p_.value();
    return -h_factor(N) / om(p, n + 1, 2) * s0_recursive(N.prefix(n - 1));
}

RatFunc SeriesEngine::fe_factor(const DiagonalForm& N) const
{
    const int n = N.size();
    const LocalData L = local_data(N, p_);
    const int k = psi_ == Character::trivial ? L.e_p : L.d_p + L.a_N;
    const int sign = psi_ == Character::trivial ? L.zeta_p : L.eta_p;
    if (((n + 1) * k) % 2 != 0)
        throw ReductionFailure("half-integral exponent in the functional equation factor");
    return RatFunc::monomial(QElem(Rat(sign) * rat_pow(p_.value(), -(n + 1) * k / 2)), -k);
}

RatFunc SeriesEngine::s0_via_reflection(const DiagonalForm& N) const
{
    const int n = N.size();
    if (n == 0)
        return RatFunc(1);
    const LocalData L = local_data(N, p_);
    RatFunc Fn = RatFunc(1) / beta_factor(n, n, L);
    RatFunc F0 = Fn.reflect_s(p_.value(), n) / fe_factor(N);
    RatFunc out = beta_factor(n, 0, L) * F0;
    check_rational(out, "S^(0) by reflection");
    return out;
}

RatFunc SeriesEngine::characteristic(const DiagonalForm& N, int nu) const
{
    check_nu(N, nu);
    const int n = N.size();
    if (nu == n)
        return RatFunc(1);
    if (nu == 0)
        return s0_closed(N);
    const std::string key = N.key() + "|" + std::to_string(nu);
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second;
    }
    const long p = p_.value();
    const DiagonalForm N0 = N.prefix(n - 1);
    const RatFunc den = om(p, n + 1, 2);
    RatFunc out = om(p, nu + 1, 2) / den * characteristic(N0, nu - 1).shift_s(p);
    if (nu <= n - 1)
        out -= h_factor(N) / den * characteristic(N0, nu);
    check_rational(out, "S^(nu)");
    std::lock_guard<std::mutex> lk(mu_);
    memo_.emplace(key, out);
    return out;
}

SeriesValue SeriesEngine::characteristic_value(const DiagonalForm& N, int nu) const
{
    SeriesValue v;
    v.S = characteristic(N, nu);
    v.local = local_data(N, p_);
    if (N.size() >= 1) {
        v.beta = beta_factor(N.size(), nu, v.local);
        v.F = v.S / v.beta;
    } else {
        v.beta = RatFunc(1);
        v.F = v.S;
    }
    return v;
}

RatFunc SeriesEngine::cusp(const DiagonalForm& N, int nu) const
{
    check_nu(N, nu);
    RatFunc out;
    for (int r = nu; r <= N.size(); ++r) {
        RatFunc c = mix_.c_coeff(nu, r);
        if (!c.is_zero())
            out += c * characteristic(N, r);
    }
    check_rational(out, "S^{w_nu}");
    return out;
}

std::size_t SeriesEngine::memo_size() const
{
    std::lock_guard<std::mutex> lk(mu_);
    return memo_.size();
}

} // namespace siegelp
