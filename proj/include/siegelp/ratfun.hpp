#pragma once

// Laurent polynomials and reduced rational functions in X = p^{-s} with
// coefficients in Q(sqrt(d)).
//
// A RatFunc is kept in canonical form: the denominator is an ordinary
// polynomial with constant term 1, all X-powers of the fraction sit in the
// numerator, and numerator and denominator are coprime. Canonical form makes
// equality a plain component comparison.

#include "siegelp/qfield.hpp"

#include <string>
#include <vector>

namespace siegelp {

class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const QElem& c) { if (!c.is_zero()) coeffs_.push_back(c); }
    static LaurentPoly monomial(const QElem& c, int exponent);
    /// 1 - c X^m.
    static LaurentPoly one_minus(const QElem& c, int m);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    int low() const noexcept { return low_; }
    /// Highest exponent with a nonzero coefficient.
    int high() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    QElem coeff(int exponent) const;
    const std::vector<QElem>& dense() const noexcept { return coeffs_; }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& y);
    LaurentPoly& operator-=(const LaurentPoly& y);
    friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
    friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
    friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
    LaurentPoly scaled(const QElem& c) const;
    /// Multiply by X^k.
    LaurentPoly shifted(int k) const;
    /// X -> c X.
    LaurentPoly substitute_scale(const QElem& c) const;
    /// X -> c X^{-1}.
    LaurentPoly substitute_reflect(const QElem& c) const;

    friend bool operator==(const LaurentPoly& x, const LaurentPoly& y);

    bool all_rational() const;
    QElem evaluate(const QElem& x) const;

    std::string to_string() const;

    /// Builds from explicit (exponent, coefficient) data; zeros are dropped.
    static LaurentPoly from_dense(int low, std::vector<QElem> coeffs);

private:
    void trim();

    int low_ = 0;
    std::vector<QElem> coeffs_;
};

/// Polynomial division for polynomials with low() >= 0 on both sides.
void poly_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q, LaurentPoly& r);
/// Monic gcd of two polynomials (low() >= 0); gcd(0, 0) = 0.
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);

class RatFunc {
public:
    /// The zero function.
    RatFunc() : den_(QElem(1)) {}
    RatFunc(const QElem& c) : num_(c), den_(QElem(1)) {}
    RatFunc(long c) : RatFunc(QElem(c)) {}
    RatFunc(const LaurentPoly& num) : num_(num), den_(QElem(1)) {}
    /// Canonicalizing constructor.
    static RatFunc normalize(const LaurentPoly& num, const LaurentPoly& den);

    /// c X^k.
    static RatFunc monomial(const QElem& c, int k) { return RatFunc(LaurentPoly::monomial(c, k)); }
    /// 1 - c X^m.
    static RatFunc one_minus(const QElem& c, int m) { return RatFunc(LaurentPoly::one_minus(c, m)); }

    const LaurentPoly& num() const noexcept { return num_; }
    const LaurentPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& y) { return *this = *this + y; }
    RatFunc& operator-=(const RatFunc& y) { return *this = *this - y; }
    RatFunc& operator*=(const RatFunc& y) { return *this = *this * y; }
    RatFunc& operator/=(const RatFunc& y) { return *this = *this / y; }
    friend RatFunc operator+(const RatFunc& x, const RatFunc& y);
    friend RatFunc operator-(const RatFunc& x, const RatFunc& y);
    friend RatFunc operator*(const RatFunc& x, const RatFunc& y);
    friend RatFunc operator/(const RatFunc& x, const RatFunc& y);
    friend bool operator==(const RatFunc& x, const RatFunc& y) = default;

    RatFunc pow(int k) const;

    /// s -> s - 1, i.e. X -> pX.
    RatFunc shift_s(long p) const;
    /// s -> n + 1 - s, i.e. X -> p^{-(n+1)} X^{-1}.
    RatFunc reflect_s(long p, int n) const;

    /// Power series coefficients of X^0..X^order at X = 0.
    std::vector<QElem> taylor(int order) const;

    bool all_rational() const { return num_.all_rational() && den_.all_rational(); }
    /// Throws NotInField unless every coefficient is rational.
    void require_rational(const std::string& what) const;

    std::string to_string() const;

private:
    RatFunc(LaurentPoly num, LaurentPoly den, int) : num_(std::move(num)), den_(std::move(den)) {}

    LaurentPoly num_;
    LaurentPoly den_;
};

} // namespace siegelp
