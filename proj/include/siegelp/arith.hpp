#pragma once

// Integer and rational helpers shared by every module: the Rat/Int aliases,
// the odd-prime strong type, p-adic valuations and the quadratic residue symbol.

#include <gmpxx.h>

#include <string>

namespace siegelp {

using Int = mpz_class;
using Rat = mpq_class;

enum class Character { trivial, quadratic };

std::string to_string(Character c);
Character parse_character(const std::string& s);

/// An odd prime. Construction validates primality.
class Prime {
public:
    explicit Prime(long p);

    long value() const noexcept { return p_; }
    operator long() const noexcept { return p_; }

    /// chi_p(-1) = (-1)^((p-1)/2).
    int chi_minus_one() const noexcept { return p_ % 4 == 1 ? 1 : -1; }
    /// (-1)^((p-1)/2) p, the discriminant base of the quadratic character field.
    long pstar() const noexcept { return chi_minus_one() * p_; }
    /// Least positive quadratic non-residue.
    long nonresidue() const noexcept { return nonresidue_; }

    friend bool operator==(const Prime&, const Prime&) = default;

private:
    long p_;
    long nonresidue_;
};

bool is_prime(long n);

/// Legendre symbol (a/p) for an integer a.
int legendre(const Int& a, long p);
/// Legendre symbol of a p-unit rational: (num/p)(den/p).
int legendre(const Rat& a, long p);
/// Kronecker symbol (a/n).
int kronecker(const Int& a, long n);

/// ord_p of a nonzero integer.
int ord_p(const Int& a, long p);
/// ord_p of a nonzero rational.
int ord_p(const Rat& a, long p);
/// a / p^{ord_p(a)}.
Rat unit_part(const Rat& a, long p);

/// p^k as a rational, k of either sign.
Rat rat_pow(long p, int k);
Int int_pow(long p, unsigned k);

/// Signed squarefree part of a nonzero integer (trial division).
Int squarefree_part(const Int& a);

} // namespace siegelp
