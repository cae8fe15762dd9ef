#include "siegelp/localinv.hpp"

#include "siegelp/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace siegelp {

using RatMatrix = std::vector<std::vector<Rat>>;

HalfIntMatrix::HalfIntMatrix(std::vector<std::vector<Int>> g) : G(std::move(g))
{
    const std::size_t n = G.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (G[i].size() != n)
            throw PreconditionError("matrix is not square");
        if (G[i][i] % 2 != 0)
            throw PreconditionError("2N must have even diagonal");
        for (std::size_t j = 0; j < i; ++j)
            if (G[i][j] != G[j][i])
                throw PreconditionError("matrix is not symmetric");
    }
}

HalfIntMatrix HalfIntMatrix::diagonal(const std::vector<Int>& entries)
{
    std::vector<std::vector<Int>> g(entries.size(), std::vector<Int>(entries.size(), Int(0)));
    for (std::size_t i = 0; i < entries.size(); ++i)
        g[i][i] = 2 * entries[i];
    return HalfIntMatrix(std::move(g));
}

namespace {

RatMatrix to_rat(const HalfIntMatrix& N)
{
    const int n = N.size();
    RatMatrix a(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = N.entry(i, j);
    return a;
}

// e_i <- e_i + c e_j applied as a congruence A -> E^t A E.
void add_basis(RatMatrix& a, std::size_t i, std::size_t j, const Rat& c)
{
    const std::size_t n = a.size();
    for (std::size_t t = 0; t < n; ++t)
        a[i][t] += c * a[j][t];
    for (std::size_t t = 0; t < n; ++t)
        a[t][i] += c * a[t][j];
}

} // namespace

Rat HalfIntMatrix::det() const
{
    RatMatrix a = to_rat(*this);
    const std::size_t n = a.size();
    Rat d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0)
                continue;
            Rat f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k)
                a[r][k] -= f * a[c][k];
        }
    }
    return d;
}

// ---- DiagonalForm ----

std::vector<Rat> DiagonalForm::entries() const
{
    std::vector<Rat> out;
    for (std::size_t i = 0; i < units.size(); ++i)
        out.push_back(Rat(units[i]) * rat_pow(p, exponents[i]));
    return out;
}

DiagonalForm DiagonalForm::prefix(int k) const
{
    DiagonalForm f = *this;
    f.units.resize(static_cast<std::size_t>(k));
    f.exponents.resize(static_cast<std::size_t>(k));
    f.original_units.resize(std::min(original_units.size(), static_cast<std::size_t>(k)));
    return f;
}

DiagonalForm DiagonalForm::scaled(int k) const
{
    DiagonalForm f = *this;
    for (auto& u : f.exponents)
        u += k;
    return f;
}

DiagonalForm DiagonalForm::bump_last(int k) const
{
    if (units.empty())
        throw PreconditionError("bump_last on the empty form");
    DiagonalForm f = *this;
    f.exponents.back() += k;
    return f;
}

HalfIntMatrix DiagonalForm::matrix() const
{
    std::vector<Int> e;
    for (std::size_t i = 0; i < units.size(); ++i)
        e.push_back(Int(units[i]) * int_pow(p, static_cast<unsigned>(exponents[i])));
    return HalfIntMatrix::diagonal(e);
}

std::string DiagonalForm::key() const
{
    std::ostringstream os;
    os << p << ':';
    for (std::size_t i = 0; i < units.size(); ++i)
        os << units[i] << '^' << exponents[i] << ',';
    return os.str();
}

std::string DiagonalForm::to_string() const
{
    std::ostringstream os;
    os << "diag(";
    for (std::size_t i = 0; i < units.size(); ++i) {
        if (i)
            os << ", ";
        os << units[i];
        if (exponents[i] == 1)
            os << '*' << p;
        else if (exponents[i] > 1)
            os << '*' << p << '^' << exponents[i];
    }
    os << ')';
    return os.str();
}

namespace {

DiagonalForm canonical_form(const Prime& p, const std::vector<Rat>& units, const std::vector<int>& exponents)
{
    const std::size_t n = units.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> cls(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(units[i]) == 0 || ord_p(units[i], p) != 0)
            throw PreconditionError("unit " + units[i].get_str() + " is not prime to " + std::to_string(p.value()));
        cls[i] = legendre(units[i], p);
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (exponents[a] != exponents[b])
            return exponents[a] < exponents[b];
        return cls[a] > cls[b];
    });
    DiagonalForm f;
    f.p = p.value();
    for (std::size_t k : order) {
        if (exponents[k] < 0)
            throw PreconditionError("negative exponent in diagonal form");
        f.units.push_back(cls[k] == 1 ? 1 : p.nonresidue());
        f.exponents.push_back(exponents[k]);
        f.original_units.push_back(units[k]);
    }
    // sign of the sorting permutation
    int sign = 1;
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i])
            continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = order[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0)
            sign = -sign;
    }
    f.twist = sign == 1 ? 1 : p.chi_minus_one();
    return f;
}

} // namespace

DiagonalForm make_diagonal(const Prime& p, const std::vector<Int>& units, const std::vector<int>& exponents)
{
    if (units.size() != exponents.size())
        throw PreconditionError("units and exponents differ in length");
    std::vector<Rat> u(units.begin(), units.end());
    DiagonalForm f = canonical_form(p, u, exponents);
    return f;
}

// ---- symbols ----

int hilbert_symbol(const Rat& a, const Rat& b, long p)
{
    if (p == 2)
        throw UnsupportedPrime("Hilbert symbol at 2 is not supported");
    if (sgn(a) == 0 || sgn(b) == 0)
        throw PreconditionError("Hilbert symbol of zero");
    const int alpha = ord_p(a, p);
    const int beta = ord_p(b, p);
    const Rat u = unit_part(a, p);
    const Rat v = unit_part(b, p);
    int r = 1;
    if (beta % 2 != 0)
        r *= legendre(u, p);
    if (alpha % 2 != 0)
        r *= legendre(v, p);
    if (alpha % 2 != 0 && beta % 2 != 0 && p % 4 == 3)
        r = -r;
    return r;
}

std::vector<Rat> diagonalize_over_Q(const HalfIntMatrix& N)
{
    RatMatrix a = to_rat(N);
    const std::size_t n = a.size();
    std::vector<Rat> out;
    for (std::size_t c = 0; c < n; ++c) {
        if (a[c][c] == 0) {
            std::size_t j = c + 1;
            while (j < n && a[c][j] == 0)
                ++j;
            if (j == n)
                throw SingularMatrix("matrix is singular");
            // (e_c + t e_j) has value a_cc + 2t a_cj + t^2 a_jj, nonzero for t = 1 or t = -1
            Rat t = (a[j][j] + 2 * a[c][j] != 0) ? Rat(1) : Rat(-1);
            add_basis(a, c, j, t);
        }
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0)
                continue;
            add_basis(a, r, c, -a[r][c] / a[c][c]);
        }
        out.push_back(a[c][c]);
    }
    return out;
}

int hasse_invariant(const std::vector<Rat>& diagonal, long p)
{
    int h = 1;
    for (std::size_t i = 0; i < diagonal.size(); ++i)
        for (std::size_t j = i; j < diagonal.size(); ++j)
            h *= hilbert_symbol(diagonal[i], diagonal[j], p);
    return h;
}

int hasse_invariant(const HalfIntMatrix& N, long p)
{
    return hasse_invariant(diagonalize_over_Q(N), p);
}

int zeta_p_of(const std::vector<Rat>& diagonal, long p, bool include_minus_one_factor)
{
    const int n = static_cast<int>(diagonal.size());
    if (n % 2 == 0)
        return 1;
    Rat det = 1;
    for (const auto& a : diagonal)
        det *= a;
    int z = hasse_invariant(diagonal, p);
    z *= hilbert_symbol(det, ((n - 1) / 2) % 2 == 0 ? det : Rat(-det), p);
    if (include_minus_one_factor && ((n * n - 1) / 8) % 2 == 1)
        z *= hilbert_symbol(Rat(-1), Rat(-1), p);
    return z;
}

int zeta_p_of(const HalfIntMatrix& N, long p, bool include_minus_one_factor)
{
    return zeta_p_of(diagonalize_over_Q(N), p, include_minus_one_factor);
}

Int fundamental_discriminant(const Rat& D)
{
    if (sgn(D) == 0)
        throw PreconditionError("discriminant of zero");
    Int m = squarefree_part(Int(D.get_num() * D.get_den()));
    if (m == 1)
        return 1;
    Int r = m % 4;
    if (r < 0)
        r += 4;
    return r == 1 ? m : Int(4 * m);
}

LocalData local_data(const std::vector<Rat>& diagonal, const Prime& p)
{
    const int n = static_cast<int>(diagonal.size());
    LocalData L;
    L.detN = 1;
    for (const auto& a : diagonal) {
        if (sgn(a) == 0)
            throw SingularMatrix("matrix is singular");
        L.detN *= a;
    }
    L.D_N = L.detN;
    for (int i = 0; i < n / 2; ++i)
        L.D_N *= -4;
    L.d_p = ord_p(L.D_N, p);
    L.Dprime = L.D_N / rat_pow(p, L.d_p);
    L.hasse = hasse_invariant(diagonal, p);
    L.fund_disc = fundamental_discriminant(L.D_N);
    if (n % 2 == 1) {
        L.a_N = 1;
        L.e_p = L.d_p;
        L.zeta_p = zeta_p_of(diagonal, p);
        L.eta_p = legendre(L.Dprime, p) * L.zeta_p;
        L.chiN_p = 0;
        L.chiNstar_p = 0;
        L.fund_disc_star = 0;
        return L;
    }
    L.a_N = L.d_p % 2;
    const int od = L.fund_disc == 1 ? 0 : ord_p(L.fund_disc, p);
    L.e_p = L.d_p - od;
    if (L.e_p % 2 != 0)
        throw ReductionFailure("e_p is odd for an even-size form");
    if (od == 0) {
        L.chiN_p = kronecker(L.fund_disc, p);
        L.chiNstar_p = 0;
        L.fund_disc_star = Rat(L.fund_disc * p.value());
    } else {
        L.chiN_p = 0;
        L.fund_disc_star = Rat(L.fund_disc, Int(p.value()));
        L.fund_disc_star.canonicalize();
        L.chiNstar_p = legendre(Rat(-L.fund_disc_star), p);
    }
    L.zeta_p = 1;
    L.eta_p = 1;
    return L;
}

LocalData local_data(const DiagonalForm& N, const Prime& p)
{
    return local_data(N.entries(), p);
}

LocalData local_data(const HalfIntMatrix& N, const Prime& p)
{
    return local_data(diagonalize_over_Q(N), p);
}

DiagonalForm jordan_diagonalize_Zp(const HalfIntMatrix& N, const Prime& p)
{
    RatMatrix a = to_rat(N);
    const std::size_t n = a.size();
    // U tracked as columns; A_current = U^t A U
    RatMatrix U(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        U[i][i] = 1;
    auto add_col = [&](std::size_t i, std::size_t j, const Rat& c) {
        add_basis(a, i, j, c);
        for (std::size_t t = 0; t < n; ++t)
            U[t][i] += c * U[t][j];
    };
    auto val = [&](const Rat& x) { return sgn(x) == 0 ? INT32_MAX : ord_p(x, p); };

    std::vector<bool> done(n, false);
    std::vector<Rat> units;
    std::vector<int> exps;
    std::vector<std::size_t> pivot_order;
    for (std::size_t step = 0; step < n; ++step) {
        int best = INT32_MAX;
        std::size_t bi = n, bj = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i])
                continue;
            for (std::size_t j = i; j < n; ++j) {
                if (done[j])
                    continue;
                int v = val(a[i][j]);
                if (v < best || (v == best && i == j && bi != bj)) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        }
        if (best == INT32_MAX)
            throw SingularMatrix("matrix is singular");
        if (bi != bj) {
            // every remaining diagonal entry has larger valuation
            add_col(bi, bj, Rat(1));
        }
        const std::size_t c = bi;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || done[r] || sgn(a[r][c]) == 0)
                continue;
            add_col(r, c, -a[r][c] / a[c][c]);
        }
        done[c] = true;
        pivot_order.push_back(c);
        exps.push_back(ord_p(a[c][c], p));
        units.push_back(unit_part(a[c][c], p));
    }
    // det U as a p-unit (pivot order permutation is handled by the sort twist)
    Rat detU = 1;
    {
        RatMatrix m = U;
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t piv = c;
            while (piv < n && sgn(m[piv][c]) == 0)
                ++piv;
            if (piv != c) {
                std::swap(m[piv], m[c]);
                detU = -detU;
            }
            detU *= m[c][c];
            for (std::size_t r = c + 1; r < n; ++r) {
                if (sgn(m[r][c]) == 0)
                    continue;
                Rat f = m[r][c] / m[c][c];
                for (std::size_t k = c; k < n; ++k)
                    m[r][k] -= f * m[c][k];
            }
        }
    }
    // permutation from pivot order to column order
    int perm_sign = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (pivot_order[i] > pivot_order[j])
                perm_sign = -perm_sign;
    DiagonalForm f = canonical_form(p, units, exps);
    int tw = legendre(detU, p) * f.twist;
    if (perm_sign < 0)
        tw *= p.chi_minus_one();
    f.twist = tw;
    return f;
}

} // namespace siegelp
