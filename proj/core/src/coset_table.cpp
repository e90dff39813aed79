#include "stringc/coset_table.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <string>
#include <utility>

namespace stringc {

std::size_t EnumerationLimits::default_max_cosets() {
    if (const char* env = std::getenv("STRINGC_MAX_COSETS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
    }
    return std::size_t{1} << 20;
}

namespace {

using Cols = std::vector<std::uint32_t>;

Cols word_columns(const Word& w, std::size_t rank) {
    Cols cols;
    cols.reserve(w.size());
    for (const Letter& l : w.letters()) {
        if (l.gen >= rank)
            throw BadWord("letter outside the presentation rank");
        cols.push_back(l.sign > 0 ? l.gen : static_cast<std::uint32_t>(l.gen + rank));
    }
    return cols;
}

// Deduction-driven enumeration: every new edge is scanned against every
// relator rotation passing through it, coincidences are processed with a
// union-find keeping the smallest coset as representative, and undefined
// cells are filled row by row. One extra relator sweep per coset backstops
// the deduction logic at negligible cost.
class Enumerator {
  public:
    Enumerator(const Presentation& pres, const std::vector<Word>& subgroup,
               const EnumerationLimits& limits)
        : rank_(pres.rank()), ncols_(2 * pres.rank()), limits_(limits) {
        build_rotations(pres);
        new_coset();
        for (const Word& w : subgroup) {
            Cols cols = word_columns(w, rank_);
            if (!cols.empty())
                scan_and_fill(cols);
            drain();
        }
        run();
    }

    void extract(std::vector<std::uint32_t>& out, std::size_t& n_out) {
        std::vector<std::int32_t> idx(rows_, -1);
        std::int32_t next = 0;
        for (std::size_t c = 0; c < rows_; ++c)
            if (find(static_cast<std::int32_t>(c)) == static_cast<std::int32_t>(c))
                idx[c] = next++;
        n_out = static_cast<std::size_t>(next);
        out.assign(n_out * ncols_, 0);
        for (std::size_t c = 0; c < rows_; ++c) {
            if (idx[c] < 0)
                continue;
            for (std::size_t col = 0; col < ncols_; ++col) {
                std::int32_t d = cell(static_cast<std::int32_t>(c), col);
                if (d < 0)
                    throw Error("internal: undefined cell in a finished table");
                out[static_cast<std::size_t>(idx[c]) * ncols_ + col] =
                    static_cast<std::uint32_t>(idx[find(d)]);
            }
        }
    }

  private:
    std::uint32_t inv_col(std::uint32_t c) const {
        return c < rank_ ? static_cast<std::uint32_t>(c + rank_)
                         : static_cast<std::uint32_t>(c - rank_);
    }

    std::int32_t& cell(std::int32_t c, std::size_t col) {
        return tab_[static_cast<std::size_t>(c) * ncols_ + col];
    }

    void step() {
        if (++steps_ > limits_.max_steps)
            throw LimitExceeded("step limit of " + std::to_string(limits_.max_steps) +
                                " reached");
    }

    std::int32_t find(std::int32_t c) {
        std::int32_t r = c;
        while (parent_[static_cast<std::size_t>(r)] != r)
            r = parent_[static_cast<std::size_t>(r)];
        while (parent_[static_cast<std::size_t>(c)] != r) {
            std::int32_t nx = parent_[static_cast<std::size_t>(c)];
            parent_[static_cast<std::size_t>(c)] = r;
            c = nx;
        }
        return r;
    }

    std::int32_t new_coset() {
        if (rows_ >= limits_.max_cosets)
            throw LimitExceeded("coset limit of " + std::to_string(limits_.max_cosets) +
                                " reached");
        step();
        tab_.resize(tab_.size() + ncols_, -1);
        parent_.push_back(static_cast<std::int32_t>(rows_));
        ++rows_;
        return static_cast<std::int32_t>(rows_ - 1);
    }

    void merge(std::int32_t a, std::int32_t b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        if (a > b)
            std::swap(a, b);
        parent_[static_cast<std::size_t>(b)] = a;
        dead_.push_back(b);
    }

    // Installs u*col = v between live representatives. Only safe outside
    // the cascade when both cells are already known to be empty; conflicts
    // found by the cascade itself turn into further merges.
    void install(std::int32_t u, std::uint32_t col, std::int32_t v) {
        std::int32_t fwd = cell(u, col);
        if (fwd >= 0) {
            merge(v, fwd);
            return;
        }
        std::int32_t rev = cell(v, inv_col(col));
        if (rev >= 0) {
            merge(u, rev);
            return;
        }
        cell(u, col) = v;
        cell(v, inv_col(col)) = u;
        deductions_.emplace_back(u, col);
    }

    // Consumes the rows of dead cosets, re-homing each of their edges at
    // the surviving representatives. Edges are stored paired in both
    // directions, so clearing the reverse cell first keeps every edge
    // owned by exactly one pending row.
    void cascade() {
        while (!dead_.empty()) {
            std::int32_t y = dead_.front();
            dead_.pop_front();
            for (std::uint32_t col = 0; col < ncols_; ++col) {
                std::int32_t d = cell(y, col);
                if (d < 0)
                    continue;
                cell(y, col) = -1;
                if (cell(d, inv_col(col)) == y)
                    cell(d, inv_col(col)) = -1;
                step();
                install(find(y), col, find(d));
            }
        }
    }

    void coincidence(std::int32_t a, std::int32_t b) {
        merge(a, b);
        cascade();
    }

    // Two-ended scan of the relation c*rot = c. A completed scan that
    // disagrees merges, a single gap becomes a new edge, anything wider is
    // left for later deductions.
    void scan(std::int32_t c, const Cols& rot) {
        std::size_t i = 0, q = rot.size();
        std::int32_t f = c, b = c;
        while (i < q) {
            std::int32_t d = cell(f, rot[i]);
            if (d < 0)
                break;
            f = d;
            ++i;
            step();
        }
        if (i == q) {
            if (f != c)
                coincidence(f, c);
            return;
        }
        while (q > i + 1) {
            std::int32_t d = cell(b, inv_col(rot[q - 1]));
            if (d < 0)
                break;
            b = d;
            --q;
            step();
        }
        if (q == i + 1) {
            std::int32_t d = cell(b, inv_col(rot[i]));
            if (d >= 0) {
                if (d != f)
                    coincidence(d, f);
                return;
            }
            install(f, rot[i], b);
        }
    }

    void drain() {
        while (!deductions_.empty()) {
            auto [c0, col] = deductions_.front();
            deductions_.pop_front();
            std::int32_t c = find(c0);
            if (cell(c, col) < 0)
                continue;
            for (const Cols& rot : buckets_[col]) {
                scan(c, rot);
                c = find(c);
                if (cell(c, col) < 0)
                    break;
            }
        }
    }

    // Forces 0*w = 0, defining intermediate cosets as needed.
    void scan_and_fill(const Cols& w) {
        std::int32_t f = 0;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            std::int32_t d = cell(f, w[i]);
            if (d < 0) {
                d = new_coset();
                install(f, w[i], d);
            }
            f = find(d);
            step();
        }
        std::uint32_t last = w.back();
        std::int32_t home = find(0);
        std::int32_t d = cell(f, last);
        if (d >= 0) {
            if (find(d) != home)
                coincidence(d, home);
            return;
        }
        std::int32_t r = cell(home, inv_col(last));
        if (r >= 0) {
            if (find(r) != f)
                coincidence(r, f);
            return;
        }
        install(f, last, home);
    }

    // True when an undefined cell exists; the cell is then at
    // (ptr_row_, ptr_col_). Cells behind the pointer in live rows stay
    // defined once the queues are drained, so the pointer never rewinds.
    bool advance_pointer() {
        while (ptr_row_ < rows_) {
            std::int32_t c = static_cast<std::int32_t>(ptr_row_);
            if (find(c) != c) {
                ++ptr_row_;
                ptr_col_ = 0;
                continue;
            }
            if (ptr_col_ >= ncols_) {
                ++ptr_row_;
                ptr_col_ = 0;
                continue;
            }
            if (cell(c, ptr_col_) >= 0) {
                ++ptr_col_;
                continue;
            }
            return true;
        }
        return false;
    }

    void sweep_one() {
        while (sweep_ < rows_ &&
               find(static_cast<std::int32_t>(sweep_)) != static_cast<std::int32_t>(sweep_))
            ++sweep_;
        if (sweep_ >= rows_)
            return;
        std::int32_t c = static_cast<std::int32_t>(sweep_++);
        for (const Cols& r : relators_)
            scan(find(c), r);
    }

    void run() {
        for (;;) {
            drain();
            if (!advance_pointer())
                return;
            if (sweep_ < rows_) {
                sweep_one();
                continue;
            }
            std::int32_t n = new_coset();
            install(static_cast<std::int32_t>(ptr_row_), ptr_col_, n);
        }
    }

    void build_rotations(const Presentation& pres) {
        buckets_.assign(ncols_, {});
        std::set<Cols> seen_relators;
        for (const Word& w : pres.relators()) {
            Cols cw = word_columns(w, rank_);
            std::size_t b = 0, e = cw.size();
            while (e - b >= 2 && cw[b] == inv_col(cw[e - 1])) {
                ++b;
                --e;
            }
            Cols reduced(cw.begin() + static_cast<std::ptrdiff_t>(b),
                         cw.begin() + static_cast<std::ptrdiff_t>(e));
            if (!reduced.empty() && seen_relators.insert(reduced).second)
                relators_.push_back(std::move(reduced));
        }
        std::set<Cols> seen_rotations;
        for (const Cols& r : relators_) {
            Cols inv(r.size());
            for (std::size_t i = 0; i < r.size(); ++i)
                inv[i] = inv_col(r[r.size() - 1 - i]);
            for (const Cols& w : {r, inv}) {
                for (std::size_t s = 0; s < w.size(); ++s) {
                    Cols rot(w.begin() + static_cast<std::ptrdiff_t>(s), w.end());
                    rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(s));
                    if (seen_rotations.insert(rot).second)
                        buckets_[rot[0]].push_back(std::move(rot));
                }
            }
        }
    }

    std::size_t rank_;
    std::size_t ncols_;
    EnumerationLimits limits_;
    std::vector<std::int32_t> tab_;
    std::vector<std::int32_t> parent_;
    std::size_t rows_ = 0;
    std::uint64_t steps_ = 0;
    std::deque<std::pair<std::int32_t, std::uint32_t>> deductions_;
    std::deque<std::int32_t> dead_;
    std::vector<std::vector<Cols>> buckets_;
    std::vector<Cols> relators_;
    std::size_t ptr_row_ = 0;
    std::size_t ptr_col_ = 0;
    std::size_t sweep_ = 0;
};

} // namespace

CosetTable CosetTable::enumerate(const Presentation& pres, const std::vector<Word>& subgroup,
                                 const EnumerationLimits& limits) {
    Enumerator e(pres, subgroup, limits);
    CosetTable t;
    t.rank_ = pres.rank();
    e.extract(t.tab_, t.n_);
    for (std::uint32_t c = 0; c < t.n_; ++c)
        for (const Word& w : pres.relators())
            if (t.trace(c, w) != c)
                throw Error("internal: relator fails to close on the finished table");
    for (const Word& w : subgroup)
        if (t.trace(0, w) != 0)
            throw Error("internal: subgroup generator escapes coset 0");
    return t;
}

std::uint32_t CosetTable::act(std::uint32_t coset, Letter l) const {
    if (coset >= n_)
        throw BadParam("coset out of range");
    if (l.gen >= rank_)
        throw BadWord("letter outside the presentation rank");
    return cell(coset, l.sign > 0 ? l.gen : l.gen + rank_);
}

std::uint32_t CosetTable::trace(std::uint32_t coset, const Word& w) const {
    for (const Letter& l : w.letters())
        coset = act(coset, l);
    return coset;
}

Permutation CosetTable::generator_action(std::size_t gen) const {
    if (gen >= rank_)
        throw BadParam("generator index out of range");
    std::vector<std::uint32_t> img(n_);
    for (std::uint32_t c = 0; c < n_; ++c)
        img[c] = cell(c, gen);
    return Permutation::from_images(std::move(img));
}

PermutationGroup CosetTable::coset_action() const {
    PermutationGroup g;
    g.degree = n_;
    g.generators.reserve(rank_);
    for (std::size_t i = 0; i < rank_; ++i)
        g.generators.push_back(generator_action(i));
    return g;
}

bool CosetTable::acts_trivially(const Word& w) const {
    for (std::uint32_t c = 0; c < n_; ++c)
        if (trace(c, w) != c)
            return false;
    return true;
}

std::vector<Word> CosetTable::schreier_transversal() const {
    std::vector<Word> t(n_);
    std::vector<char> seen(n_, 0);
    std::vector<std::uint32_t> queue{0};
    seen[0] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        std::uint32_t c = queue[i];
        for (std::uint32_t g = 0; g < rank_; ++g) {
            std::uint32_t d = cell(c, g);
            if (!seen[d]) {
                seen[d] = 1;
                t[d] = t[c] * Word::generator(g);
                queue.push_back(d);
            }
        }
    }
    if (queue.size() != n_)
        throw Error("internal: coset graph is not connected");
    return t;
}

IntMatrix CosetTable::abelianized_subgroup_relations(const Presentation& pres) const {
    // Non-tree edges over a breadth-first spanning tree index the Schreier
    // generators of the subgroup; tree edges rewrite to nothing.
    constexpr std::int64_t kUnnumbered = -2;
    constexpr std::int64_t kTree = -1;
    std::vector<std::int64_t> sgen(n_ * rank_, kUnnumbered);
    std::vector<char> seen(n_, 0);
    std::vector<std::uint32_t> queue{0};
    seen[0] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        std::uint32_t c = queue[i];
        for (std::uint32_t g = 0; g < rank_; ++g) {
            std::uint32_t d = cell(c, g);
            if (!seen[d]) {
                seen[d] = 1;
                sgen[c * rank_ + g] = kTree;
                queue.push_back(d);
            }
        }
    }
    if (queue.size() != n_)
        throw Error("internal: coset graph is not connected");
    std::int64_t count = 0;
    for (auto& s : sgen)
        if (s == kUnnumbered)
            s = count++;

    IntMatrix m(n_ * pres.relators().size(), static_cast<std::size_t>(count));
    std::size_t row = 0;
    for (std::uint32_t c = 0; c < n_; ++c) {
        for (const Word& w : pres.relators()) {
            std::uint32_t d = c;
            for (const Letter& l : w.letters()) {
                if (l.sign > 0) {
                    std::int64_t id = sgen[d * rank_ + l.gen];
                    if (id >= 0)
                        m.at(row, static_cast<std::size_t>(id)) += 1;
                    d = cell(d, l.gen);
                } else {
                    std::uint32_t e = cell(d, rank_ + l.gen);
                    std::int64_t id = sgen[e * rank_ + l.gen];
                    if (id >= 0)
                        m.at(row, static_cast<std::size_t>(id)) -= 1;
                    d = e;
                }
            }
            if (d != c)
                throw Error("internal: relator fails to close while rewriting");
            ++row;
        }
    }
    return m;
}

} // namespace stringc
