#include "stringc/snf.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace stringc {

namespace {

// Signal for the int64 lane: any overflow aborts the run and the caller
// retries with arbitrary precision.
struct Overflow {};

struct I64 {
    std::int64_t v = 0;
    I64() = default;
    I64(std::int64_t x) : v(x) {}
    friend bool operator==(I64 a, I64 b) { return a.v == b.v; }
};

inline bool is_zero(I64 x) { return x.v == 0; }
inline bool is_unit(I64 x) { return x.v == 1 || x.v == -1; }

inline I64 add(I64 a, I64 b) {
    I64 r;
    if (__builtin_add_overflow(a.v, b.v, &r.v))
        throw Overflow{};
    return r;
}

inline I64 sub(I64 a, I64 b) {
    I64 r;
    if (__builtin_sub_overflow(a.v, b.v, &r.v))
        throw Overflow{};
    return r;
}

inline I64 mul(I64 a, I64 b) {
    I64 r;
    if (__builtin_mul_overflow(a.v, b.v, &r.v))
        throw Overflow{};
    return r;
}

// Quotient truncated toward zero.
inline I64 divq(I64 a, I64 b) {
    if (b.v == -1 && a.v == std::numeric_limits<std::int64_t>::min())
        throw Overflow{};
    return I64{a.v / b.v};
}

inline bool divides(I64 d, I64 x) {
    if (d.v == 1 || d.v == -1)
        return true;
    return x.v % d.v == 0;
}

inline std::uint64_t uabs(std::int64_t x) {
    return x < 0 ? 0u - static_cast<std::uint64_t>(x) : static_cast<std::uint64_t>(x);
}

inline bool abs_less(I64 a, I64 b) { return uabs(a.v) < uabs(b.v); }

inline mpz_class to_mpz(I64 x) { return mpz_class(static_cast<long>(x.v)); }

inline bool is_zero(const mpz_class& x) { return x == 0; }
inline bool is_unit(const mpz_class& x) { return mpz_cmpabs_ui(x.get_mpz_t(), 1) == 0; }
inline mpz_class add(const mpz_class& a, const mpz_class& b) { return a + b; }
inline mpz_class sub(const mpz_class& a, const mpz_class& b) { return a - b; }
inline mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
inline mpz_class divq(const mpz_class& a, const mpz_class& b) { return a / b; }

inline bool divides(const mpz_class& d, const mpz_class& x) {
    return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline bool abs_less(const mpz_class& a, const mpz_class& b) {
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
}

inline mpz_class to_mpz(const mpz_class& x) { return x; }

// Melts rows with a +-1 entry first: such a pivot clears its column with
// plain row additions and its row then empties for free, each worth an
// invariant factor of 1. Relation matrices from rewriting are dominated by
// unit entries, so this leaves only a small dense core for the generic
// elimination below.
template <class T>
class UnitMelt {
  public:
    explicit UnitMelt(std::vector<std::vector<T>> rows)
        : m_(std::move(rows)), R_(m_.size()), C_(R_ == 0 ? 0 : m_[0].size()) {
        row_live_.assign(R_, 1);
        col_live_.assign(C_, 1);
        nnz_.assign(R_, 0);
        units_.assign(R_, 0);
        for (std::size_t i = 0; i < R_; ++i)
            for (std::size_t j = 0; j < C_; ++j)
                count_in(i, m_[i][j]);
    }

    std::size_t run() {
        std::size_t ones = 0;
        for (;;) {
            std::size_t pi = R_;
            for (std::size_t i = 0; i < R_; ++i)
                if (row_live_[i] && units_[i] > 0 && (pi == R_ || nnz_[i] < nnz_[pi]))
                    pi = i;
            if (pi == R_)
                break;
            std::size_t pj = C_;
            for (std::size_t j = 0; j < C_; ++j)
                if (col_live_[j] && is_unit(m_[pi][j])) {
                    pj = j;
                    break;
                }
            eliminate(pi, pj);
            ++ones;
        }
        return ones;
    }

    // Live submatrix left over after run().
    std::vector<std::vector<T>> residue() const {
        std::vector<std::vector<T>> out;
        for (std::size_t i = 0; i < R_; ++i) {
            if (!row_live_[i] || nnz_[i] == 0)
                continue;
            std::vector<T> row;
            for (std::size_t j = 0; j < C_; ++j)
                if (col_live_[j])
                    row.push_back(m_[i][j]);
            out.push_back(std::move(row));
        }
        return out;
    }

  private:
    void count_in(std::size_t i, const T& x) {
        if (!is_zero(x)) {
            ++nnz_[i];
            if (is_unit(x))
                ++units_[i];
        }
    }

    void count_out(std::size_t i, const T& x) {
        if (!is_zero(x)) {
            --nnz_[i];
            if (is_unit(x))
                --units_[i];
        }
    }

    void eliminate(std::size_t pi, std::size_t pj) {
        const T p = m_[pi][pj];
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < C_; ++j)
            if (col_live_[j] && !is_zero(m_[pi][j]))
                cols.push_back(j);
        for (std::size_t x = 0; x < R_; ++x) {
            if (x == pi || !row_live_[x] || is_zero(m_[x][pj]))
                continue;
            const T c = mul(m_[x][pj], p);
            for (std::size_t j : cols) {
                count_out(x, m_[x][j]);
                m_[x][j] = sub(m_[x][j], mul(c, m_[pi][j]));
                count_in(x, m_[x][j]);
            }
        }
        row_live_[pi] = 0;
        col_live_[pj] = 0;
    }

    std::vector<std::vector<T>> m_;
    std::size_t R_, C_;
    std::vector<char> row_live_, col_live_;
    std::vector<std::uint32_t> nnz_;
    std::vector<std::uint32_t> units_;
};

// Classic elimination with a smallest-magnitude pivot and the usual
// divisibility repair, applied to the dense core.
template <class T>
std::vector<T> dense_diagonal(std::vector<std::vector<T>> d) {
    std::vector<T> diag;
    const std::size_t R = d.size();
    const std::size_t C = R == 0 ? 0 : d[0].size();
    std::size_t r = 0, c = 0;
    while (r < R && c < C) {
        std::size_t pi = R, pj = C;
        for (std::size_t i = r; i < R; ++i)
            for (std::size_t j = c; j < C; ++j)
                if (!is_zero(d[i][j]) && (pi == R || abs_less(d[i][j], d[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == R)
            break;
        std::swap(d[r], d[pi]);
        if (pj != c)
            for (std::size_t i = r; i < R; ++i)
                std::swap(d[i][c], d[i][pj]);

        bool clean = true;
        for (std::size_t i = r + 1; i < R; ++i) {
            if (is_zero(d[i][c]))
                continue;
            const T q = divq(d[i][c], d[r][c]);
            if (!is_zero(q))
                for (std::size_t j = c; j < C; ++j)
                    d[i][j] = sub(d[i][j], mul(q, d[r][j]));
            if (!is_zero(d[i][c]))
                clean = false;
        }
        for (std::size_t j = c + 1; j < C; ++j) {
            if (is_zero(d[r][j]))
                continue;
            const T q = divq(d[r][j], d[r][c]);
            if (!is_zero(q))
                for (std::size_t i = r; i < R; ++i)
                    d[i][j] = sub(d[i][j], mul(q, d[i][c]));
            if (!is_zero(d[r][j]))
                clean = false;
        }
        if (!clean)
            continue;

        bool fixed = false;
        for (std::size_t i = r + 1; i < R && !fixed; ++i)
            for (std::size_t j = c + 1; j < C && !fixed; ++j)
                if (!divides(d[r][c], d[i][j])) {
                    for (std::size_t k = c; k < C; ++k)
                        d[r][k] = add(d[r][k], d[i][k]);
                    fixed = true;
                }
        if (fixed)
            continue;

        diag.push_back(d[r][c]);
        ++r;
        ++c;
    }
    return diag;
}

template <class T>
std::vector<mpz_class> reduce(std::vector<std::vector<T>> rows, std::size_t cols) {
    UnitMelt<T> melt(std::move(rows));
    std::size_t ones = melt.run();
    std::vector<T> core = dense_diagonal(melt.residue());

    std::vector<mpz_class> out;
    out.reserve(cols);
    for (std::size_t i = 0; i < ones; ++i)
        out.emplace_back(1);
    for (const T& x : core) {
        mpz_class v = to_mpz(x);
        out.push_back(abs(v));
    }
    while (out.size() < cols)
        out.emplace_back(0);
    return out;
}

// Drops zero rows, normalizes each row's sign, and removes duplicates;
// none of these change the row lattice.
std::vector<std::vector<std::int64_t>> prefilter(const IntMatrix& m) {
    std::vector<std::vector<std::int64_t>> rows;
    for (std::size_t i = 0; i < m.rows; ++i) {
        std::vector<std::int64_t> row(m.a.begin() + static_cast<std::ptrdiff_t>(i * m.cols),
                                      m.a.begin() +
                                          static_cast<std::ptrdiff_t>((i + 1) * m.cols));
        auto it = std::find_if(row.begin(), row.end(), [](std::int64_t x) { return x != 0; });
        if (it == row.end())
            continue;
        if (*it < 0)
            for (auto& x : row)
                x = -x;
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

template <class T>
std::vector<std::vector<T>> lift(const std::vector<std::vector<std::int64_t>>& rows) {
    std::vector<std::vector<T>> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<T> row;
        row.reserve(r.size());
        for (std::int64_t x : r)
            row.emplace_back(x);
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace

std::vector<mpz_class> smith_normal_form(const IntMatrix& m) {
    auto rows = prefilter(m);
    try {
        return reduce(lift<I64>(rows), m.cols);
    } catch (const Overflow&) {
        return reduce(lift<mpz_class>(rows), m.cols);
    }
}

AbelianInvariants abelian_invariants(const IntMatrix& relations) {
    AbelianInvariants inv;
    for (const mpz_class& d : smith_normal_form(relations)) {
        if (d == 0)
            ++inv.free_rank;
        else if (d > 1)
            inv.torsion.push_back(d);
    }
    return inv;
}

} // namespace stringc
