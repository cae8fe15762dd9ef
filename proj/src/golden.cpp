#include "siegelp/golden.hpp"

namespace siegelp::golden {

namespace {

constexpr Character kQuad = Character::quadratic;

RatFunc om(long p, int pexp, int xexp, int c = 1)
{
    if (c == 0)
        return RatFunc(1);
    return RatFunc::one_minus(QElem(Rat(c) * rat_pow(p, pexp)), xexp);
}

// 1 - p^{a l} X^{2l} - chi p^{b} X (1 - p^{a(l-1)} X^{2(l-1)})
RatFunc bracket(long p, int a, int b, int l, int chi)
{
    RatFunc r = om(p, a * l, 2 * l);
    if (chi != 0)
        r -= RatFunc::monomial(QElem(Rat(chi) * rat_pow(p, b)), 1) * om(p, a * (l - 1), 2 * (l - 1));
    return r;
}

std::vector<Rat> entries(const Prime& p, const std::vector<Int>& units, const std::vector<int>& exps)
{
    std::vector<Rat> out;
    for (std::size_t i = 0; i < units.size(); ++i)
        out.push_back(Rat(units[i]) * rat_pow(p, exps[i]));
    return out;
}

} // namespace

RatFunc degree1_w0(const Prime& p, const Int& alpha, int m)
{
    // chi_p(alpha) eps_p p^{(1-s)m + 1/2 - s}
    QElem c = eps_p_half_power(p, kQuad, 1, 2 * m + 1) * QElem(legendre(alpha, p));
    return RatFunc::monomial(c, m + 1);
}

RatFunc degree1_w1(const Prime&)
{
    return RatFunc(1);
}

RatFunc degree2_nu1(const Prime& p, const Int& alpha, const Int& beta, int m, int r)
{
    const long pv = p.value();
    const LocalData L = local_data(entries(p, {alpha, beta}, {m, m + r}), p);
    const int chis = L.chiNstar_p;
    const int l = (r + 1) / 2;
    QElem c = eps_p_half_power(p, kQuad, 1, 4 * m + 3) * QElem(legendre(alpha, p));
    RatFunc head = RatFunc::monomial(c, m + 1) * om(pv, 2, 2) / (om(pv, 3, 2) * om(pv, 1, 1, chis));
    return head * bracket(pv, 3, 1, l, chis);
}

RatFunc degree3_nu2(const Prime& p, const Int& alpha, const Int& beta, const Int& gamma, int m, int r, int t)
{
    const long pv = p.value();
    const LocalData L = local_data(entries(p, {alpha, beta, gamma}, {m, m + r, m + r + t}), p);
    const LocalData L0 = local_data(entries(p, {alpha, beta}, {m, m + r}), p);
    const int chis = L0.chiNstar_p;
    const int l = (r + 1) / 2;
    const int f = m + r / 2;
    const int d = L.d_p;

    QElem c1 = eps_p_half_power(p, kQuad, 1, 4 * d - 6 * f + 3) * QElem(L.eta_p);
    RatFunc first = RatFunc::monomial(c1, d - 2 * f + 1) * om(pv, -1, -1, chis) / om(pv, 2, 1, chis);

    QElem c2 = eps_p_half_power(p, kQuad, 1, 6 * m + 5) * QElem(legendre(alpha, p));
    RatFunc second = RatFunc::monomial(c2, m + 1) * om(pv, 3, 2) / (om(pv, 5, 2) * om(pv, 2, 1, chis)) *
                     bracket(pv, 5, 2, l, chis);
    return first + second;
}

RatFunc degree3_w0(const Prime& p, const Int& alpha, const Int& beta, const Int& gamma, int m, int r, int t)
{
    const long pv = p.value();
    const LocalData L = local_data(entries(p, {alpha, beta, gamma}, {m, m + r, m + r + t}), p);
    const int chi = p.chi_minus_one();
    const int d = L.d_p;
    QElem c1 = eps_p_half_power(p, kQuad, 1, 4 * d + 7) * QElem(-chi * L.eta_p);
    RatFunc first = RatFunc::monomial(c1, d + 3) * om(pv, 2, 2) / om(pv, 3, 2);
    RatFunc second = RatFunc::monomial(QElem(Rat(chi * (pv - 1) * pv)), 2) / om(pv, 3, 2) *
                     degree3_nu2(p, alpha, beta, gamma, m, r, t);
    return first + second;
}

} // namespace siegelp::golden
