#include "siegelp/arith.hpp"

#include "siegelp/errors.hpp"

#include <cstdlib>

namespace siegelp {

std::string to_string(Character c)
{
    return c == Character::trivial ? "trivial" : "quadratic";
}

Character parse_character(const std::string& s)
{
    if (s == "trivial" || s == "chi0")
        return Character::trivial;
    if (s == "quadratic" || s == "chip")
        return Character::quadratic;
    throw ParseError("unknown character '" + s + "'");
}

bool is_prime(long n)
{
    if (n < 2)
        return false;
    for (long f = 2; f * f <= n; ++f)
        if (n % f == 0)
            return false;
    return true;
}

Prime::Prime(long p) : p_(p), nonresidue_(0)
{
    if (p == 2)
        throw UnsupportedPrime("p = 2 is not supported; p must be an odd prime");
    if (!is_prime(p))
        throw PreconditionError(std::to_string(p) + " is not an odd prime");
    for (long r = 2; r < p; ++r) {
        if (legendre(Int(r), p) == -1) {
            nonresidue_ = r;
            break;
        }
    }
}

int legendre(const Int& a, long p)
{
    Int pp(p);
    return mpz_kronecker(a.get_mpz_t(), pp.get_mpz_t());
}

int legendre(const Rat& a, long p)
{
    return legendre(a.get_num(), p) * legendre(a.get_den(), p);
}

int kronecker(const Int& a, long n)
{
    Int nn(n);
    return mpz_kronecker(a.get_mpz_t(), nn.get_mpz_t());
}

int ord_p(const Int& a, long p)
{
    if (a == 0)
        throw PreconditionError("ord_p of zero");
    Int pp(p);
    Int r;
    return static_cast<int>(mpz_remove(r.get_mpz_t(), a.get_mpz_t(), pp.get_mpz_t()));
}

int ord_p(const Rat& a, long p)
{
    return ord_p(a.get_num(), p) - ord_p(a.get_den(), p);
}

Rat unit_part(const Rat& a, long p)
{
    return a / rat_pow(p, ord_p(a, p));
}

Int int_pow(long p, unsigned k)
{
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), k);
    return r;
}

Rat rat_pow(long p, int k)
{
    if (k >= 0)
        return Rat(int_pow(p, static_cast<unsigned>(k)));
    return Rat(Int(1), int_pow(p, static_cast<unsigned>(-k)));
}

Int squarefree_part(const Int& a)
{
    if (a == 0)
        throw PreconditionError("squarefree part of zero");
    Int m = abs(a);
    Int out = 1;
    for (Int f = 2; f * f <= m; ++f) {
        int e = 0;
        while (m % f == 0) {
            m /= f;
            ++e;
        }
        if (e % 2 == 1)
            out *= f;
    }
    out *= m;
    return a < 0 ? Int(-out) : out;
}

} // namespace siegelp
