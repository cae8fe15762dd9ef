#include "siegelp/ratfun.hpp"

#include "siegelp/errors.hpp"

#include <algorithm>

namespace siegelp {

// ---- LaurentPoly ----

LaurentPoly LaurentPoly::monomial(const QElem& c, int exponent)
{
    LaurentPoly r;
    if (!c.is_zero()) {
        r.low_ = exponent;
        r.coeffs_.push_back(c);
    }
    return r;
}

LaurentPoly LaurentPoly::one_minus(const QElem& c, int m)
{
    return LaurentPoly(QElem(1)) - monomial(c, m);
}

LaurentPoly LaurentPoly::from_dense(int low, std::vector<QElem> coeffs)
{
    LaurentPoly r;
    r.low_ = low;
    r.coeffs_ = std::move(coeffs);
    r.trim();
    return r;
}

void LaurentPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero())
        ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        low_ += static_cast<int>(lead);
    }
    if (coeffs_.empty())
        low_ = 0;
}

QElem LaurentPoly::coeff(int exponent) const
{
    if (coeffs_.empty() || exponent < low_ || exponent > high())
        return QElem();
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& y)
{
    if (y.is_zero())
        return *this;
    if (is_zero())
        return *this = y;
    int lo = std::min(low_, y.low_);
    int hi = std::max(high(), y.high());
    std::vector<QElem> c(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        c[static_cast<std::size_t>(low_ - lo) + i] = coeffs_[i];
    for (std::size_t i = 0; i < y.coeffs_.size(); ++i)
        c[static_cast<std::size_t>(y.low_ - lo) + i] += y.coeffs_[i];
    low_ = lo;
    coeffs_ = std::move(c);
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& y)
{
    return *this += -y;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y)
{
    if (x.is_zero() || y.is_zero())
        return {};
    std::vector<QElem> c(x.coeffs_.size() + y.coeffs_.size() - 1);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
        if (x.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < y.coeffs_.size(); ++j)
            c[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
    return LaurentPoly::from_dense(x.low_ + y.low_, std::move(c));
}

LaurentPoly LaurentPoly::scaled(const QElem& c) const
{
    if (c.is_zero())
        return {};
    LaurentPoly r = *this;
    for (auto& v : r.coeffs_)
        v *= c;
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const
{
    LaurentPoly r = *this;
    if (!r.is_zero())
        r.low_ += k;
    return r;
}

namespace {

QElem qpow(const QElem& c, int k)
{
    QElem base = k < 0 ? c.inverse() : c;
    unsigned e = static_cast<unsigned>(k < 0 ? -k : k);
    QElem r(1);
    while (e) {
        if (e & 1U)
            r *= base;
        base *= base;
        e >>= 1U;
    }
    return r;
}

} // namespace

LaurentPoly LaurentPoly::substitute_scale(const QElem& c) const
{
    LaurentPoly r = *this;
    if (is_zero())
        return r;
    QElem f = qpow(c, low_);
    for (auto& v : r.coeffs_) {
        v *= f;
        f *= c;
    }
    return r;
}

LaurentPoly LaurentPoly::substitute_reflect(const QElem& c) const
{
    if (is_zero())
        return {};
    std::vector<QElem> out(coeffs_.size());
    QElem f = qpow(c, low_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out[coeffs_.size() - 1 - i] = coeffs_[i] * f;
        f *= c;
    }
    return from_dense(-high(), std::move(out));
}

bool operator==(const LaurentPoly& x, const LaurentPoly& y)
{
    return x.low_ == y.low_ && x.coeffs_ == y.coeffs_;
}

bool LaurentPoly::all_rational() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const QElem& c) { return c.is_rational(); });
}

QElem LaurentPoly::evaluate(const QElem& x) const
{
    if (is_zero())
        return QElem();
    QElem acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * x + coeffs_[i];
    return acc * qpow(x, low_);
}

std::string LaurentPoly::to_string() const
{
    if (is_zero())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero())
            continue;
        int e = low_ + static_cast<int>(i);
        std::string c = coeffs_[i].to_string();
        if (!c.empty() && c.find_first_of("+-", 1) != std::string::npos)
            c = "(" + c + ")";
        if (!s.empty())
            s += (c[0] == '-') ? " - " : " + ";
        else if (c[0] == '-')
            s += "-";
        if (c[0] == '-')
            c.erase(0, 1);
        if (e == 0)
            s += c;
        else {
            if (c != "1")
                s += c + "*";
            s += e == 1 ? "X" : "X^" + std::to_string(e);
        }
    }
    return s;
}

// ---- polynomial division and gcd ----

void poly_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q, LaurentPoly& r)
{
    if (b.is_zero())
        throw DivisionByZero("polynomial division by zero");
    if ((!a.is_zero() && a.low() < 0) || b.low() < 0)
        throw PreconditionError("poly_divmod needs ordinary polynomials");
    const int db = b.high();
    const QElem lead_inv = b.coeff(db).inverse();
    std::vector<QElem> rem(static_cast<std::size_t>(a.is_zero() ? 0 : a.high() + 1));
    for (int e = a.low(); !a.is_zero() && e <= a.high(); ++e)
        rem[static_cast<std::size_t>(e)] = a.coeff(e);
    const int da = static_cast<int>(rem.size()) - 1;
    std::vector<QElem> quot(static_cast<std::size_t>(std::max(0, da - db + 1)));
    for (int e = da; e >= db; --e) {
        const QElem& top = rem[static_cast<std::size_t>(e)];
        if (top.is_zero())
            continue;
        QElem f = top * lead_inv;
        quot[static_cast<std::size_t>(e - db)] = f;
        for (int k = b.low(); k <= db; ++k) {
            QElem bk = b.coeff(k);
            if (!bk.is_zero())
                rem[static_cast<std::size_t>(e - db + k)] -= f * bk;
        }
    }
    q = LaurentPoly::from_dense(0, std::move(quot));
    if (static_cast<int>(rem.size()) > db)
        rem.resize(static_cast<std::size_t>(std::max(db, 0)));
    r = LaurentPoly::from_dense(0, std::move(rem));
}

namespace {

LaurentPoly make_monic(const LaurentPoly& a)
{
    if (a.is_zero())
        return a;
    return a.scaled(a.coeff(a.high()).inverse());
}

} // namespace

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b)
{
    a = make_monic(a);
    b = make_monic(b);
    while (!b.is_zero()) {
        LaurentPoly q, r;
        poly_divmod(a, b, q, r);
        a = std::move(b);
        b = make_monic(r);
    }
    return a;
}

// ---- RatFunc ----

RatFunc RatFunc::normalize(const LaurentPoly& num, const LaurentPoly& den)
{
    if (den.is_zero())
        throw DivisionByZero("rational function with zero denominator");
    if (num.is_zero())
        return RatFunc();
    // Move all X-powers to the numerator; the remaining cores are polynomials
    // with nonzero constant terms.
    const int shift = num.low() - den.low();
    LaurentPoly n = num.shifted(-num.low());
    LaurentPoly d = den.shifted(-den.low());
    if (d.high() > 0 && n.high() > 0) {
        LaurentPoly g = poly_gcd(n, d);
        if (g.high() > 0) {
            LaurentPoly q, r;
            poly_divmod(n, g, q, r);
            n = std::move(q);
            poly_divmod(d, g, q, r);
            d = std::move(q);
        }
    }
    QElem c = d.coeff(0).inverse();
    return RatFunc(n.scaled(c).shifted(shift), d.scaled(c), 0);
}

RatFunc RatFunc::operator-() const
{
    return RatFunc(-num_, den_, 0);
}

RatFunc operator+(const RatFunc& x, const RatFunc& y)
{
    if (x.is_zero())
        return y;
    if (y.is_zero())
        return x;
    if (x.den_ == y.den_)
        return RatFunc::normalize(x.num_ + y.num_, x.den_);
    LaurentPoly g = poly_gcd(x.den_, y.den_);
    if (g.high() > 0) {
        LaurentPoly xq, yq, r;
        poly_divmod(x.den_, g, xq, r);
        poly_divmod(y.den_, g, yq, r);
        return RatFunc::normalize(x.num_ * yq + y.num_ * xq, xq * y.den_);
    }
    return RatFunc::normalize(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

RatFunc operator-(const RatFunc& x, const RatFunc& y)
{
    return x + (-y);
}

RatFunc operator*(const RatFunc& x, const RatFunc& y)
{
    if (x.is_zero() || y.is_zero())
        return RatFunc();
    if (x.den_.high() == 0 && y.den_.high() == 0)
        return RatFunc(x.num_ * y.num_, LaurentPoly(QElem(1)), 0);
    return RatFunc::normalize(x.num_ * y.num_, x.den_ * y.den_);
}

RatFunc operator/(const RatFunc& x, const RatFunc& y)
{
    if (y.is_zero())
        throw DivisionByZero("division by the zero rational function");
    return RatFunc::normalize(x.num_ * y.den_, x.den_ * y.num_);
}

RatFunc RatFunc::pow(int k) const
{
    if (k < 0)
        return RatFunc(1) / pow(-k);
    RatFunc r(1);
    RatFunc base = *this;
    while (k) {
        if (k & 1)
            r *= base;
        k >>= 1;
        if (k)
            base *= base;
    }
    return r;
}

RatFunc RatFunc::shift_s(long p) const
{
    QElem c{Rat(p)};
    return normalize(num_.substitute_scale(c), den_.substitute_scale(c));
}

RatFunc RatFunc::reflect_s(long p, int n) const
{
    QElem c{rat_pow(p, -(n + 1))};
    return normalize(num_.substitute_reflect(c), den_.substitute_reflect(c));
}

std::vector<QElem> RatFunc::taylor(int order) const
{
    if (order < 0)
        throw PreconditionError("negative Taylor order");
    if (!num_.is_zero() && num_.low() < 0)
        throw NegativeExponent("numerator has negative exponent " + std::to_string(num_.low()));
    std::vector<QElem> t(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) {
        QElem acc = num_.coeff(k);
        for (int j = 1; j <= std::min(k, den_.high()); ++j) {
            QElem dj = den_.coeff(j);
            if (!dj.is_zero())
                acc -= dj * t[static_cast<std::size_t>(k - j)];
        }
        t[static_cast<std::size_t>(k)] = acc;
    }
    return t;
}

void RatFunc::require_rational(const std::string& what) const
{
    if (!all_rational())
        throw NotInField(what + " has an irrational coefficient: " + to_string());
}

std::string RatFunc::to_string() const
{
    if (den_.high() == 0)
        return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace siegelp
