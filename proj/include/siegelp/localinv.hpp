#pragma once

// p-adic invariants of non-degenerate half-integral symmetric matrices.

#include "siegelp/arith.hpp"

#include <string>
#include <vector>

namespace siegelp {

/// A half-integral symmetric matrix N stored as the integer matrix G = 2N.
struct HalfIntMatrix {
    std::vector<std::vector<Int>> G;

    HalfIntMatrix() = default;
    explicit HalfIntMatrix(std::vector<std::vector<Int>> g);

    int size() const noexcept { return static_cast<int>(G.size()); }
    /// Entry of N itself.
    Rat entry(int i, int j) const
    {
        Rat r(G[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], 2);
        r.canonicalize();
        return r;
    }
    Rat det() const;

    static HalfIntMatrix diagonal(const std::vector<Int>& entries);
};

/// diag(alpha_1 p^{u_1}, ..., alpha_n p^{u_n}) with 0 <= u_1 <= ... <= u_n.
///
/// Units are stored as square-class representatives (1 or the least
/// non-residue r); the values they replaced are kept in original_units.
struct DiagonalForm {
    long p = 3;
    std::vector<long> units;
    std::vector<int> exponents;
    std::vector<Rat> original_units;
    /// chi_p(det U) of the equivalence that produced this form (metadata only).
    int twist = 1;

    int size() const noexcept { return static_cast<int>(units.size()); }
    /// Diagonal entries alpha_i p^{u_i}.
    std::vector<Rat> entries() const;
    /// Leading k x k block.
    DiagonalForm prefix(int k) const;
    /// Every exponent raised by k (the form p^k N).
    DiagonalForm scaled(int k) const;
    /// Last exponent raised by k.
    DiagonalForm bump_last(int k) const;
    HalfIntMatrix matrix() const;

    std::string key() const;
    std::string to_string() const;

    friend bool operator==(const DiagonalForm& a, const DiagonalForm& b)
    {
        return a.p == b.p && a.units == b.units && a.exponents == b.exponents;
    }
};

/// Canonical diagonal form from unit/exponent lists. Units must be p-units.
DiagonalForm make_diagonal(const Prime& p, const std::vector<Int>& units, const std::vector<int>& exponents);

struct LocalData {
    Rat detN;
    Rat D_N;
    int d_p = 0;
    Rat Dprime;
    int a_N = 0;
    int e_p = 0;
    int zeta_p = 1;
    int eta_p = 1;
    int chiN_p = 0;
    int chiNstar_p = 0;
    int hasse = 1;
    Int fund_disc = 1;
    Rat fund_disc_star;

    friend bool operator==(const LocalData&, const LocalData&) = default;
};

/// (a, b)_p for odd p.
int hilbert_symbol(const Rat& a, const Rat& b, long p);

/// Diagonal entries of a symmetric congruence diagonalization over Q.
std::vector<Rat> diagonalize_over_Q(const HalfIntMatrix& N);

/// prod_{i <= j} (a_i, a_j)_p over a diagonalization.
int hasse_invariant(const std::vector<Rat>& diagonal, long p);
int hasse_invariant(const HalfIntMatrix& N, long p);

/// zeta_p(N); include_minus_one_factor drops (-1,-1)_p^{(n^2-1)/8} when false.
int zeta_p_of(const std::vector<Rat>& diagonal, long p, bool include_minus_one_factor = true);
int zeta_p_of(const HalfIntMatrix& N, long p, bool include_minus_one_factor = true);

/// Discriminant of Q(sqrt(D)); 1 when D is a rational square.
Int fundamental_discriminant(const Rat& D);

LocalData local_data(const std::vector<Rat>& diagonal, const Prime& p);
LocalData local_data(const DiagonalForm& N, const Prime& p);
LocalData local_data(const HalfIntMatrix& N, const Prime& p);

/// Z_p-equivalent diagonal form; throws SingularMatrix for det N = 0.
DiagonalForm jordan_diagonalize_Zp(const HalfIntMatrix& N, const Prime& p);

} // namespace siegelp
