#include "siegelp/qfield.hpp"

#include "siegelp/errors.hpp"

#include <cmath>

namespace siegelp {

namespace {

Rat parse_rat(std::string_view s)
{
    if (s.empty())
        throw ParseError("empty rational");
    std::string str(s);
    if (str.front() == '+')
        str.erase(0, 1);
    Rat r;
    if (r.set_str(str, 10) != 0)
        throw ParseError("bad rational '" + std::string(s) + "'");
    r.canonicalize();
    return r;
}

} // namespace

QElem::QElem(const Rat& a, const Rat& b, long d) : a_(a), b_(b), d_(d)
{
    if (d == 0 || d == 1 || squarefree_part(Int(d)) != d)
        throw PreconditionError("field base must be squarefree and not 0 or 1, got " + std::to_string(d));
}

long QElem::merge_context(const QElem& y) const
{
    if (d_ == 0)
        return y.d_;
    if (y.d_ == 0 || y.d_ == d_)
        return d_;
    throw ContextError("cannot combine elements of Q(sqrt(" + std::to_string(d_) + ")) and Q(sqrt(" +
                       std::to_string(y.d_) + "))");
}

QElem QElem::conjugate() const
{
    QElem r = *this;
    r.b_ = -b_;
    return r;
}

Rat QElem::norm() const
{
    return a_ * a_ - Rat(d_) * b_ * b_;
}

QElem QElem::inverse() const
{
    if (is_zero())
        throw DivisionByZero("inverse of zero");
    Rat n = norm();
    QElem r = *this;
    r.a_ = a_ / n;
    r.b_ = -b_ / n;
    return r;
}

QElem QElem::operator-() const
{
    QElem r = *this;
    r.a_ = -a_;
    r.b_ = -b_;
    return r;
}

QElem& QElem::operator+=(const QElem& y)
{
    d_ = merge_context(y);
    a_ += y.a_;
    b_ += y.b_;
    return *this;
}

QElem& QElem::operator-=(const QElem& y)
{
    d_ = merge_context(y);
    a_ -= y.a_;
    b_ -= y.b_;
    return *this;
}

QElem& QElem::operator*=(const QElem& y)
{
    long d = merge_context(y);
    if (sgn(b_) == 0 && sgn(y.b_) == 0) {
        a_ *= y.a_;
    } else {
        Rat a = a_ * y.a_ + Rat(d) * b_ * y.b_;
        Rat b = a_ * y.b_ + y.a_ * b_;
        a_ = std::move(a);
        b_ = std::move(b);
    }
    d_ = d;
    return *this;
}

QElem& QElem::operator/=(const QElem& y)
{
    if (y.is_zero())
        throw DivisionByZero("division by zero scalar");
    if (sgn(y.b_) == 0) {
        d_ = merge_context(y);
        a_ /= y.a_;
        b_ /= y.a_;
        return *this;
    }
    return *this *= y.inverse();
}

bool operator==(const QElem& x, const QElem& y)
{
    if (sgn(x.b_) != 0 || sgn(y.b_) != 0)
        (void)x.merge_context(y);
    return x.a_ == y.a_ && x.b_ == y.b_;
}

std::string QElem::to_string() const
{
    if (is_rational())
        return a_.get_str();
    std::string s = a_.get_str();
    if (sgn(b_) >= 0)
        s += "+";
    s += b_.get_str() + "*w";
    return s;
}

QElem QElem::parse(std::string_view text, long d)
{
    std::string s;
    for (char c : text)
        if (c != ' ')
            s.push_back(c);
    if (s.empty())
        throw ParseError("empty scalar");
    if (s.size() < 2 || s.substr(s.size() - 2) != "*w")
        return QElem(parse_rat(s));
    std::string body = s.substr(0, s.size() - 2);
    // split at the last sign that is not the first character
    std::size_t cut = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if (body[i] == '+' || body[i] == '-') {
            cut = i;
            break;
        }
    }
    if (cut == std::string::npos)
        return QElem(Rat(0), parse_rat(body), d);
    Rat a = parse_rat(body.substr(0, cut));
    std::string bs = body.substr(cut);
    return QElem(a, parse_rat(bs), d);
}

std::complex<double> QElem::embed() const
{
    double a = a_.get_d();
    if (sgn(b_) == 0)
        return {a, 0.0};
    double b = b_.get_d();
    if (d_ > 0)
        return {a + b * std::sqrt(static_cast<double>(d_)), 0.0};
    return {a, b * std::sqrt(static_cast<double>(-d_))};
}

long field_context(const Prime& p, Character psi)
{
    return psi == Character::trivial ? p.value() : p.pstar();
}

QElem eps_p_half_power(const Prime& p, Character psi, int eps_exponent, int half_exponent)
{
    const long d = field_context(p, psi);
    const int chi = p.chi_minus_one();
    int e = ((eps_exponent % 4) + 4) % 4;
    // eps^e = sign * eps^(e mod 2) since eps^2 = chi_p(-1)
    Rat sign = (e >= 2 && chi == -1) ? Rat(-1) : Rat(1);
    const bool eps_odd = e % 2 == 1;
    const bool k_odd = (half_exponent % 2 + 2) % 2 == 1;
    const int whole = (half_exponent - (k_odd ? 1 : 0)) / 2;
    Rat scale = sign * rat_pow(p, whole);
    const bool eps_is_one = p.value() % 4 == 1;

    if (!eps_odd && !k_odd)
        return QElem(scale);
    if (eps_odd && !k_odd) {
        if (eps_is_one)
            return QElem(scale);
        throw NotInField("eps_p * p^(k/2) with k even is not in Q(sqrt(" + std::to_string(d) + "))");
    }
    // an odd power of sqrt(p), optionally times eps: eps sqrt(p) = sqrt(p*)
    const long needed = eps_odd ? p.pstar() : p.value();
    if (needed != d)
        throw NotInField("value needs sqrt(" + std::to_string(needed) + "), field is Q(sqrt(" + std::to_string(d) + "))");
    return QElem(Rat(0), scale, d);
}

} // namespace siegelp
