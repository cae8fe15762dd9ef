#include "siegelp/oracle.hpp"

#include "siegelp/errors.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

namespace siegelp {

namespace {

constexpr int kMaxN = 3;

using Cell = std::int64_t;
using Block = Cell[kMaxN][kMaxN];

// Residue arithmetic modulo q = p^L with lookup tables for valuations and
// unit inverses; q stays far below 2^31 for every configuration we accept.
struct ModRing {
    long p;
    int L;
    long q;
    std::vector<int> val;
    std::vector<Cell> inv;
    std::vector<Cell> pw;

    ModRing(long p_, int L_) : p(p_), L(L_), q(1)
    {
        for (int i = 0; i < L; ++i)
            q *= p;
        val.assign(static_cast<std::size_t>(q), 0);
        inv.assign(static_cast<std::size_t>(q), 0);
        pw.assign(static_cast<std::size_t>(L + 1), 1);
        for (int i = 1; i <= L; ++i)
            pw[static_cast<std::size_t>(i)] = pw[static_cast<std::size_t>(i - 1)] * p;
        val[0] = L;
        for (long x = 1; x < q; ++x) {
            long y = x;
            int v = 0;
            while (y % p == 0) {
                y /= p;
                ++v;
            }
            val[static_cast<std::size_t>(x)] = v;
            if (v == 0) {
                Int xi(x), qi(q), r;
                mpz_invert(r.get_mpz_t(), xi.get_mpz_t(), qi.get_mpz_t());
                inv[static_cast<std::size_t>(x)] = r.get_si();
            }
        }
    }

    Cell mod(Cell x) const
    {
        x %= q;
        return x < 0 ? x + q : x;
    }
    int v(Cell x) const { return val[static_cast<std::size_t>(x)]; }
};

// Sum of (L - v) over the elementary divisors p^v < p^L of a k x m block.
int block_delta(const ModRing& R, Block a, int k, int m)
{
    int rows[kMaxN], cols[kMaxN];
    for (int i = 0; i < k; ++i)
        rows[i] = i;
    for (int j = 0; j < m; ++j)
        cols[j] = j;
    int nr = k, nc = m, delta = 0;
    while (nr > 0 && nc > 0) {
        int best = R.L, bi = -1, bj = -1;
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) {
                int v = R.v(a[rows[i]][cols[j]]);
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0)
            break;
        delta += R.L - best;
        const int pr = rows[bi], pc = cols[bj];
        const Cell uinv = R.inv[static_cast<std::size_t>(a[pr][pc] / R.pw[static_cast<std::size_t>(best)])];
        for (int i = 0; i < nr; ++i) {
            const int r = rows[i];
            if (r == pr || a[r][pc] == 0)
                continue;
            const Cell f = R.mod((a[r][pc] / R.pw[static_cast<std::size_t>(best)]) * uinv);
            for (int j = 0; j < nc; ++j) {
                const int c = cols[j];
                a[r][c] = R.mod(a[r][c] - f * a[pr][c]);
            }
        }
        rows[bi] = rows[--nr];
        cols[bj] = cols[--nc];
    }
    return delta;
}

struct SymResult {
    int delta = 0;
    int nu = 0;
    int polar = 0;
    int chi = 1;
};

// Symmetric Jordan splitting of a symmetric matrix modulo p^L.
SymResult sym_reduce(const ModRing& R, Block a, int n)
{
    int idx[kMaxN];
    for (int i = 0; i < n; ++i)
        idx[i] = i;
    int k = n;
    SymResult out;
    while (k > 0) {
        int best = R.L, bi = -1, bj = -1;
        for (int s = 0; s < k; ++s)
            for (int t = s; t < k; ++t) {
                int v = R.v(a[idx[s]][idx[t]]);
                if (v < best || (v == best && s == t && bi != bj)) {
                    best = v;
                    bi = s;
                    bj = t;
                }
            }
        if (bi < 0 || bj < 0)
            break;
        int piv = idx[bi];
        if (bi != bj) {
            // all remaining diagonal valuations exceed best: e_i <- e_i + e_j
            const int o = idx[bj];
            for (int t = 0; t < k; ++t)
                a[piv][idx[t]] = R.mod(a[piv][idx[t]] + a[o][idx[t]]);
            for (int t = 0; t < k; ++t)
                a[idx[t]][piv] = R.mod(a[idx[t]][piv] + a[idx[t]][o]);
        }
        const Cell unit = a[piv][piv] / R.pw[static_cast<std::size_t>(best)];
        const Cell uinv = R.inv[static_cast<std::size_t>(unit % R.q)];
        // Schur complement of the pivot
        Cell f[kMaxN] = {};
        for (int s = 0; s < k; ++s) {
            const int r = idx[s];
            if (r != piv)
                f[r] = R.mod((a[r][piv] / R.pw[static_cast<std::size_t>(best)]) * uinv);
        }
        for (int s = 0; s < k; ++s) {
            const int r = idx[s];
            if (r == piv || f[r] == 0)
                continue;
            for (int t = 0; t < k; ++t) {
                const int c = idx[t];
                if (c != piv)
                    a[r][c] = R.mod(a[r][c] - f[r] * a[piv][c]);
            }
        }
        out.delta += R.L - best;
        ++out.polar;
        const long um = static_cast<long>(unit % R.p);
        if (um == 0)
            throw ReductionFailure("non-unit pivot in symmetric reduction");
        out.chi *= legendre(Int(um), R.p);
        idx[bi] = idx[--k];
    }
    out.nu = n - out.polar;
    return out;
}

int max_denominator_exponent(const RatSymMatrix& R, long p)
{
    int L = 1;
    for (const auto& row : R)
        for (const auto& x : row)
            if (sgn(x) != 0)
                L = std::max(L, -std::min(0, ord_p(x, p)));
    return L;
}

SymResult reduce_rational(const RatSymMatrix& R, long p)
{
    const int n = static_cast<int>(R.size());
    if (n > kMaxN)
        throw PreconditionError("oracle supports n <= 3");
    for (const auto& row : R)
        for (const auto& x : row)
            if (sgn(x) != 0 && Rat(x.get_den()) != rat_pow(p, ord_p(Int(x.get_den()), p)))
                throw PreconditionError("entries must have p-power denominators");
    const int L = max_denominator_exponent(R, p);
    ModRing ring(p, L);
    Block a{};
    Int qi(ring.q);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rat& x = R[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            Rat y = x * Rat(qi);
            Int num = y.get_num(), den = y.get_den();
            // den is a p-unit; reduce num / den modulo q
            Int dinv;
            mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), qi.get_mpz_t());
            Int r = (num * dinv) % qi;
            if (r < 0)
                r += qi;
            a[i][j] = r.get_si();
        }
    return sym_reduce(ring, a, n);
}

struct Position {
    int i;
    int j;
};

} // namespace

StratumData stratum_data(const RatSymMatrix& R, long p)
{
    SymResult r = reduce_rational(R, p);
    return {r.delta, r.nu, r.polar};
}

int psi_tilde(const RatSymMatrix& R, long p, Character psi)
{
    if (psi == Character::trivial)
        return 1;
    return reduce_rational(R, p).chi;
}

std::uint64_t default_budget()
{
    if (const char* env = std::getenv("SIEGELP_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0')
            return v;
        throw ParseError("SIEGELP_BUDGET must be a non-negative integer");
    }
    return 20'000'000'000ULL;
}

OracleTable::OracleTable(long p, const HalfIntMatrix& N, int L, std::uint64_t budget)
    : p_(p), n_(N.size()), L_(L), q_(1)
{
    if (n_ < 1 || n_ > kMaxN)
        throw PreconditionError("oracle supports 1 <= n <= 3");
    if (L < 1)
        throw PreconditionError("oracle order must be at least 1");
    Prime checked(p);
    (void)checked;
    double grid = std::pow(static_cast<double>(p), static_cast<double>(L));
    if (grid > 1e6)
        throw BudgetExceeded("p^L too large for residue tables");
    const ModRing ring(p, L);
    q_ = ring.q;

    std::vector<Position> pos;
    std::vector<Cell> weight;
    for (int j = 0; j < n_; ++j)
        for (int i = 0; i <= j; ++i) {
            pos.push_back({i, j});
            Int g = N.G[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (i == j)
                g /= 2;
            Int r = g % Int(q_);
            if (r < 0)
                r += q_;
            weight.push_back(r.get_si());
        }
    const std::size_t depth_count = pos.size();
    const std::size_t table = static_cast<std::size_t>(n_ + 1) * static_cast<std::size_t>(L_ + 1) *
                              static_cast<std::size_t>(q_);
    trivial_.assign(table, 0);
    quadratic_.assign(table, 0);

    std::atomic<long> next{0};
    std::atomic<std::uint64_t> visited{0};
    std::atomic<bool> stop{false};
    std::exception_ptr failure;
    std::mutex merge_mu;

    auto worker = [&]() {
        std::vector<std::int64_t> triv(table, 0), quad(table, 0);
        std::uint64_t local = 0;
        Block a{};
        auto flush = [&]() {
            std::uint64_t total = visited.fetch_add(local) + local;
            local = 0;
            if (total > budget)
                throw BudgetExceeded("oracle enumeration exceeded budget of " + std::to_string(budget) + " nodes");
        };
        // Depth-first over the entries in column order; a block rows 0..i x cols 0..j
        // is complete once entry (i, j) is set.
        auto dfs = [&](auto&& self, std::size_t d, Cell phase) -> void {
            const Position ps = pos[d];
            const bool last = d + 1 == depth_count;
            for (Cell x = 0; x < q_; ++x) {
                a[ps.i][ps.j] = a[ps.j][ps.i] = x;
                const Cell ph = (phase + weight[d] * x) % q_;
                if (++local >= (1U << 16)) {
                    flush();
                    if (stop.load(std::memory_order_relaxed))
                        return;
                }
                if (last) {
                    Block b;
                    for (int r = 0; r < n_; ++r)
                        for (int c = 0; c < n_; ++c)
                            b[r][c] = a[r][c];
                    const SymResult s = sym_reduce(ring, b, n_);
                    if (s.delta > L_)
                        continue;
                    const std::size_t k = index(s.nu, s.delta, ph);
                    ++triv[k];
                    quad[k] += s.chi;
                    continue;
                }
                if (ps.i >= 1) {
                    Block b;
                    for (int r = 0; r <= ps.i; ++r)
                        for (int c = 0; c <= ps.j; ++c)
                            b[r][c] = a[r][c];
                    if (block_delta(ring, b, ps.i + 1, ps.j + 1) > L_)
                        continue;
                }
                self(self, d + 1, ph);
            }
        };
        try {
            for (;;) {
                const long x = next.fetch_add(1);
                if (x >= q_ || stop.load())
                    break;
                a[0][0] = x;
                ++local;
                const Cell ph = (weight[0] * x) % q_;
                if (depth_count == 1) {
                    Block b;
                    b[0][0] = x;
                    const SymResult s = sym_reduce(ring, b, 1);
                    const std::size_t k = index(s.nu, s.delta, ph);
                    ++triv[k];
                    quad[k] += s.chi;
                } else {
                    dfs(dfs, 1, ph);
                }
            }
            flush();
        } catch (...) {
            std::lock_guard<std::mutex> lk(merge_mu);
            if (!failure)
                failure = std::current_exception();
            stop = true;
            return;
        }
        std::lock_guard<std::mutex> lk(merge_mu);
        for (std::size_t k = 0; k < table; ++k) {
            trivial_[k] += triv[k];
            quadratic_[k] += quad[k];
        }
    };

    unsigned threads = std::max(1U, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(q_));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    nodes_ = visited.load();
}

OracleSeries OracleTable::series(Character psi, int nu) const
{
    if (nu < 0 || nu > n_)
        throw PreconditionError("nu outside [0, n]");
    OracleSeries s;
    s.p = p_;
    s.psi = psi;
    s.n = n_;
    s.nu = nu;
    s.L = L_;
    s.coeffs.assign(static_cast<std::size_t>(L_ + 1), {0.0, 0.0});
    const auto& counts = psi == Character::trivial ? trivial_ : quadratic_;
    for (int l = 0; l <= L_; ++l) {
        std::complex<double> acc{0.0, 0.0};
        for (long t = 0; t < q_; ++t) {
            const std::int64_t c = counts[index(nu, l, t)];
            if (c == 0)
                continue;
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(q_);
            acc += static_cast<double>(c) * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        s.coeffs[static_cast<std::size_t>(l)] = acc;
    }
    return s;
}

OracleSeries truncated_series(Character psi, long p, const HalfIntMatrix& N, int nu, int L, std::uint64_t budget)
{
    return OracleTable(p, N, L, budget).series(psi, nu);
}

std::vector<std::complex<double>> embed_taylor(const RatFunc& f, int order)
{
    std::vector<std::complex<double>> out;
    for (const auto& c : f.taylor(order))
        out.push_back(c.embed());
    return out;
}

CompareReport compare(const RatFunc& exact, const OracleSeries& oracle, double tol)
{
    CompareReport rep;
    const auto ex = embed_taylor(exact, oracle.L);
    for (std::size_t k = 0; k < ex.size(); ++k) {
        const double d = std::abs(ex[k] - oracle.coeffs[k]);
        rep.per_order.push_back(d);
        rep.max_abs_diff = std::max(rep.max_abs_diff, d);
        if (oracle.psi == Character::trivial)
            rep.max_imag = std::max(rep.max_imag, std::abs(oracle.coeffs[k].imag()));
    }
    rep.ok = rep.max_abs_diff <= tol && rep.max_imag <= tol;
    return rep;
}

} // namespace siegelp
