#include "siegelp/cuspmix.hpp"

#include "siegelp/errors.hpp"

namespace siegelp {

namespace {

Rat rpow(const Rat& x, int k)
{
    Rat r = 1;
    Rat b = k < 0 ? Rat(1 / x) : x;
    for (int i = 0; i < (k < 0 ? -k : k); ++i)
        r *= b;
    return r;
}

// prod_{r=lo}^{hi} (p^r - 1)
Rat prod_pm1(long p, int lo, int hi, int step = 1)
{
    Rat r = 1;
    for (int k = lo; k <= hi; ++k)
        r *= rat_pow(p, step * k) - 1;
    return r;
}

RatFunc scalar_mono(const Rat& c, int k)
{
    return RatFunc::monomial(QElem(c), k);
}

RatFunc one_minus(long p, int pexp, int xexp)
{
    return RatFunc::one_minus(QElem(rat_pow(p, pexp)), xexp);
}

} // namespace

RatFunc CuspMix::m_coeff(int i, int j) const
{
    if (i > j || i < 0)
        return RatFunc();
    const long p = p_.value();
    const int d = j - i;
    if (psi_ == Character::quadratic && d % 2 != 0)
        return RatFunc();
    Rat c = rat_pow(p, -j * (j + 1) / 2) * prod_pm1(p, i + 1, j);
    if (psi_ == Character::trivial) {
        if (d % 2 == 0)
            c *= rat_pow(p, d * (d + 2) / 4) / prod_pm1(p, 1, d / 2, 2);
        else
            c *= rat_pow(p, (d * d - 1) / 4) / prod_pm1(p, 1, (d - 1) / 2, 2);
    } else {
        if ((d / 2) % 2 == 1 && p_.chi_minus_one() == -1)
            c = -c;
        c *= rat_pow(p, d * d / 4) / prod_pm1(p, 1, d / 2, 2);
    }
    return scalar_mono(c, -i);
}

RatFunc CuspMix::b_coeff_inductive(int i, int j) const
{
    if (i > j || i < 0)
        return RatFunc();
    if (i == j)
        return RatFunc(1);
    if (psi_ == Character::quadratic && (j - i) % 2 != 0)
        return RatFunc();
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = b_memo_.find({i, j});
        if (it != b_memo_.end())
            return it->second;
    }
    const long p = p_.value();
    RatFunc sum;
    for (int k = i; k < j; ++k) {
        RatFunc m = m_coeff(k, j);
        if (m.is_zero())
            continue;
        RatFunc b = b_coeff_inductive(i, k);
        if (!b.is_zero())
            sum += m * b;
    }
    // X^j p^{j(j+1)/2} / (p^{(j-i)(j+i+1)/2} X^{j-i} - 1)
    RatFunc pre = scalar_mono(rat_pow(p, j * (j + 1) / 2), j) /
                  (scalar_mono(rat_pow(p, (j - i) * (j + i + 1) / 2), j - i) - RatFunc(1));
    RatFunc out = pre * sum;
    std::lock_guard<std::mutex> lk(mu_);
    b_memo_.emplace(std::make_pair(i, j), out);
    return out;
}

RatFunc CuspMix::b_coeff_closed(int i, int j) const
{
    if (i > j || i < 0)
        return RatFunc();
    if (i == j)
        return RatFunc(1);
    const long p = p_.value();
    const int d = j - i;
    const Rat P = prod_pm1(p, i + 1, j);
    if (psi_ == Character::trivial) {
        const int half = d % 2 == 0 ? d / 2 : (d - 1) / 2;
        RatFunc den = one_minus(p, i + 1, 1);
        Rat cden = 1;
        for (int k = 1; k <= half; ++k) {
            den *= one_minus(p, 2 * i + 1 + 2 * k, 2);
            cden *= rat_pow(p, 2 * k) - 1;
        }
        const int sexp = d % 2 == 0 ? d / 2 : (d + 1) / 2;
        Rat c = (sexp % 2 == 0 ? Rat(1) : Rat(-1)) * P / cden;
        RatFunc num = scalar_mono(c, d);
        if (d % 2 == 0)
            num *= one_minus(p, j + 1, 1);
        return num / den;
    }
    if (d % 2 != 0)
        return RatFunc();
    RatFunc den(1);
    Rat cden = 1;
    for (int k = 1; k <= d / 2; ++k) {
        den *= one_minus(p, 2 * i + 1 + 2 * k, 2);
        cden *= rat_pow(p, 2 * k) - 1;
    }
    // (-chi_p(-1))^{d/2} p^{d/2}
    int sign = ((d / 2) % 2 == 0) ? 1 : -p_.chi_minus_one();
    Rat c = Rat(sign) * rat_pow(p, d / 2) * P / cden;
    return scalar_mono(c, d) / den;
}

RatFunc CuspMix::c_coeff(int i, int j) const
{
    if (i > j || i < 0)
        return RatFunc();
    if (i == j)
        return RatFunc(1);
    const long p = p_.value();
    const int d = j - i;
    if (psi_ == Character::quadratic && d % 2 != 0)
        return RatFunc();
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = c_memo_.find({i, j});
        if (it != c_memo_.end())
            return it->second;
    }
    const Rat P = prod_pm1(p, i + 1, j);
    RatFunc out;
    if (psi_ == Character::trivial) {
        if (d % 2 == 0) {
            RatFunc den = one_minus(p, j, 1);
            Rat cden = 1;
            for (int k = 1; k <= d / 2; ++k) {
                den *= one_minus(p, i + j - 1 + 2 * k, 2);
                cden *= rat_pow(p, 2 * k) - 1;
            }
            RatFunc num = scalar_mono(rat_pow(p, d * (d + 2) / 4) * P / cden, d) * one_minus(p, i, 1);
            out = num / den;
        } else {
            RatFunc den = one_minus(p, j, 1);
            Rat cden = 1;
            for (int k = 1; k <= (d - 1) / 2; ++k) {
                den *= one_minus(p, i + j + 2 * k, 2);
                cden *= rat_pow(p, 2 * k) - 1;
            }
            out = scalar_mono(rat_pow(p, (d * d - 1) / 4) * P / cden, d) / den;
        }
    } else {
        RatFunc den(1);
        Rat cden = 1;
        for (int k = 1; k <= d / 2; ++k) {
            den *= one_minus(p, i + j - 1 + 2 * k, 2);
            cden *= rat_pow(p, 2 * k) - 1;
        }
        int sign = ((d / 2) % 2 == 0) ? 1 : p_.chi_minus_one();
        out = scalar_mono(Rat(sign) * rat_pow(p, (d / 2) * (d / 2)) * P / cden, d) / den;
    }
    std::lock_guard<std::mutex> lk(mu_);
    c_memo_.emplace(std::make_pair(i, j), out);
    return out;
}

RatMatrixFn CuspMix::b_matrix(int n, bool closed) const
{
    RatMatrixFn B(static_cast<std::size_t>(n + 1), std::vector<RatFunc>(static_cast<std::size_t>(n + 1)));
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            B[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                closed ? b_coeff_closed(i, j) : b_coeff_inductive(i, j);
    return B;
}

RatMatrixFn CuspMix::c_matrix(int n) const
{
    RatMatrixFn C(static_cast<std::size_t>(n + 1), std::vector<RatFunc>(static_cast<std::size_t>(n + 1)));
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            C[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c_coeff(i, j);
    return C;
}

RatMatrixFn matrix_product(const RatMatrixFn& a, const RatMatrixFn& b)
{
    const std::size_t n = a.size();
    const std::size_t m = b.empty() ? 0 : b[0].size();
    RatMatrixFn out(n, std::vector<RatFunc>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            RatFunc acc;
            for (std::size_t k = 0; k < b.size(); ++k)
                if (!a[i][k].is_zero() && !b[k][j].is_zero())
                    acc += a[i][k] * b[k][j];
            out[i][j] = acc;
        }
    return out;
}

namespace {

Rat checked_div(const Rat& a, const Rat& b)
{
    if (sgn(b) == 0)
        throw PoleAtSample("denominator vanishes at the sample point");
    return a / b;
}

} // namespace

Rat lemma_sum_A(const Rat& x, const Rat& y, int r)
{
    Rat sum = 0;
    Rat prod = 1;
    for (int t = 1; t <= r; ++t) {
        const int k = t;
        prod *= checked_div((rpow(x, k - 1) * y - 1) * (rpow(x, r + 1 - k) - 1),
                            (rpow(x, r - k) - y) * (rpow(x, k) - 1));
        sum += prod;
    }
    return sum;
}

Rat lemma_sum_B(const Rat& x, const Rat& y, int r)
{
    Rat sum = 0;
    Rat prod = 1;
    for (int t = 1; t <= r; ++t) {
        const int k = t;
        prod *= checked_div((y - rpow(x, k - 1)) * (rpow(x, r + 1 - k) - 1), rpow(x, k) - 1);
        sum += prod;
    }
    return sum;
}

} // namespace siegelp
