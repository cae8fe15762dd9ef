#pragma once

// Exact scalars a + b*sqrt(d) with a, b rational.
//
// Every series coefficient lives in Q(sqrt(d)) for a single d fixed by the
// computation: d = p for the trivial character and d = p* = (-1)^((p-1)/2) p
// for the quadratic one, where eps_p * sqrt(p) = sqrt(p*).

#include "siegelp/arith.hpp"

#include <complex>
#include <string>
#include <string_view>

namespace siegelp {

class QElem {
public:
    /// Zero, context free.
    QElem() = default;
    /// A rational, context free until combined with an irrational element.
    QElem(const Rat& a) : a_(a) {}
    QElem(long a) : a_(a) {}
    /// a + b sqrt(d); d must be squarefree and different from 0 and 1.
    QElem(const Rat& a, const Rat& b, long d);

    static QElem sqrt_d(long d) { return QElem(Rat(0), Rat(1), d); }

    const Rat& rational_part() const noexcept { return a_; }
    const Rat& radical_part() const noexcept { return b_; }
    /// 0 when the element has never met an irrational partner.
    long context() const noexcept { return d_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    QElem conjugate() const;
    /// a^2 - d b^2.
    Rat norm() const;
    QElem inverse() const;

    QElem operator-() const;
    QElem& operator+=(const QElem& y);
    QElem& operator-=(const QElem& y);
    QElem& operator*=(const QElem& y);
    QElem& operator/=(const QElem& y);

    friend QElem operator+(QElem x, const QElem& y) { return x += y; }
    friend QElem operator-(QElem x, const QElem& y) { return x -= y; }
    friend QElem operator*(QElem x, const QElem& y) { return x *= y; }
    friend QElem operator/(QElem x, const QElem& y) { return x /= y; }

    friend bool operator==(const QElem& x, const QElem& y);

    /// "a/b" when rational, "a1/b1+a2/b2*w" otherwise (w = sqrt(d)).
    std::string to_string() const;
    static QElem parse(std::string_view text, long d);

    /// Numerical value with sqrt(d) = sqrt(d) for d > 0 and i sqrt(-d) for d < 0.
    std::complex<double> embed() const;

private:
    long merge_context(const QElem& y) const;

    Rat a_;
    Rat b_;
    long d_ = 0;
};

/// eps_p^e * p^(k/2) inside the field of the given character
/// (sqrt(p) for trivial, sqrt(p*) for quadratic). Throws NotInField when the
/// value does not lie in that field.
QElem eps_p_half_power(const Prime& p, Character psi, int eps_exponent, int half_exponent);

/// The field discriminant base used for a character.
long field_context(const Prime& p, Character psi);

} // namespace siegelp
