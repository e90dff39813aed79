#include "stringc/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>

namespace stringc {

Permutation::Permutation(std::size_t degree) : img_(degree) {
    std::iota(img_.begin(), img_.end(), 0u);
}

Permutation Permutation::from_images(std::vector<std::uint32_t> zero_based_images) {
    const std::size_t n = zero_based_images.size();
    std::vector<char> seen(n, 0);
    for (std::uint32_t y : zero_based_images) {
        if (y >= n || seen[y])
            throw BadParam("permutation images must form a bijection");
        seen[y] = 1;
    }
    Permutation p;
    p.img_ = std::move(zero_based_images);
    return p;
}

Permutation Permutation::from_one_based(const std::vector<std::uint32_t>& one_based_images) {
    std::vector<std::uint32_t> img;
    img.reserve(one_based_images.size());
    for (std::uint32_t y : one_based_images) {
        if (y == 0)
            throw BadParam("one-based permutation images start at 1");
        img.push_back(y - 1);
    }
    return from_images(std::move(img));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::uint32_t>>& cycles) {
    Permutation p(degree);
    for (const auto& cyc : cycles) {
        Permutation step(degree);
        std::vector<char> used(degree, 0);
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            std::uint32_t a = cyc[k];
            std::uint32_t b = cyc[(k + 1) % cyc.size()];
            if (a == 0 || a > degree || b == 0 || b > degree)
                throw BadParam("cycle point out of range 1.." + std::to_string(degree));
            if (used[a - 1])
                throw BadParam("repeated point inside a cycle");
            used[a - 1] = 1;
            step.img_[a - 1] = b - 1;
        }
        p = p * step;
    }
    return p;
}

std::vector<std::uint32_t> Permutation::one_based_images() const {
    std::vector<std::uint32_t> out;
    out.reserve(img_.size());
    for (std::uint32_t y : img_)
        out.push_back(y + 1);
    return out;
}

bool Permutation::is_identity() const {
    for (std::uint32_t x = 0; x < img_.size(); ++x)
        if (img_[x] != x)
            return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.img_.resize(img_.size());
    for (std::uint32_t x = 0; x < img_.size(); ++x)
        p.img_[img_[x]] = x;
    return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
        throw BadParam("permutation degrees differ in a product");
    Permutation p;
    p.img_.resize(a.degree());
    for (std::uint32_t x = 0; x < a.degree(); ++x)
        p.img_[x] = b.img_[a.img_[x]];
    return p;
}

std::uint64_t element_order(const Permutation& p) {
    std::vector<char> seen(p.degree(), 0);
    std::uint64_t order = 1;
    for (std::uint32_t x = 0; x < p.degree(); ++x) {
        if (seen[x])
            continue;
        std::uint64_t len = 0;
        std::uint32_t y = x;
        do {
            seen[y] = 1;
            y = p[y];
            ++len;
        } while (y != x);
        order = std::lcm(order, len);
    }
    return order;
}

namespace {

// Drops identities and duplicates, keeping the first occurrence order.
std::vector<Permutation> clean_generators(const std::vector<Permutation>& gens,
                                          std::size_t degree) {
    std::vector<Permutation> out;
    std::set<Permutation> seen;
    for (const auto& g : gens) {
        if (g.degree() != degree)
            throw BadParam("generator degree does not match the group degree");
        if (g.is_identity())
            continue;
        if (seen.insert(g).second)
            out.push_back(g);
    }
    return out;
}

std::int64_t smallest_moved_point(const std::vector<Permutation>& gens, std::size_t degree) {
    for (std::uint32_t x = 0; x < degree; ++x)
        for (const auto& g : gens)
            if (g[x] != x)
                return x;
    return -1;
}

StabilizerChain::Level make_level(std::size_t degree, std::vector<Permutation> gens,
                                  std::uint32_t base) {
    StabilizerChain::Level lv;
    lv.base = base;
    lv.generators = std::move(gens);
    lv.generator_inverses.reserve(lv.generators.size());
    for (const auto& g : lv.generators)
        lv.generator_inverses.push_back(g.inverse());
    lv.pos_of.assign(degree, -1);
    lv.orbit.push_back(base);
    lv.parent_pos.push_back(0);
    lv.via_gen.push_back(0);
    lv.pos_of[base] = 0;
    for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
        for (std::size_t j = 0; j < lv.generators.size(); ++j) {
            std::uint32_t q = lv.generators[j][lv.orbit[i]];
            if (lv.pos_of[q] < 0) {
                lv.pos_of[q] = static_cast<std::int64_t>(lv.orbit.size());
                lv.orbit.push_back(q);
                lv.parent_pos.push_back(static_cast<std::uint32_t>(i));
                lv.via_gen.push_back(static_cast<std::uint32_t>(j));
            }
        }
    }
    return lv;
}

// Image list of the tree word carrying the level base to orbit[pos].
std::vector<std::uint32_t> transversal_images(const StabilizerChain::Level& lv,
                                              std::size_t pos, std::size_t degree) {
    std::vector<std::uint32_t> path;
    std::size_t p = pos;
    while (p != 0) {
        path.push_back(lv.via_gen[p]);
        p = lv.parent_pos[p];
    }
    std::reverse(path.begin(), path.end());
    std::vector<std::uint32_t> v(degree);
    std::iota(v.begin(), v.end(), 0u);
    for (std::uint32_t j : path) {
        const Permutation& g = lv.generators[j];
        for (std::uint32_t x = 0; x < degree; ++x)
            v[x] = g[v[x]];
    }
    return v;
}

// Schreier generators of the level's point stabilizer, nontrivial ones only.
//
// For orbit position i, generator j and t = pos(orbit[i] ^ gen[j]), the
// Schreier generator u_i g_j u_t^-1 is trivial exactly when
// g_j[u_i[x]] == u_t[x] for every point x. Instead of materializing each
// u_i (quadratic memory), sweep point by point: for a fixed x the vector
// row[i] = u_i[x] satisfies row[0] = x and
// row[i] = gen[via_gen[i]][row[parent_pos[i]]], so one pass over the orbit
// tree yields every u_i[x] at once. Only the pairs that fail the sweep are
// materialized.
std::vector<Permutation> stabilizer_generators(const StabilizerChain::Level& lv,
                                               std::size_t degree) {
    const std::size_t m = lv.generators.size();
    const std::size_t on = lv.orbit.size();
    std::vector<std::uint32_t> tpos(on * m);
    for (std::size_t i = 0; i < on; ++i)
        for (std::size_t j = 0; j < m; ++j)
            tpos[i * m + j] =
                static_cast<std::uint32_t>(lv.pos_of[lv.generators[j][lv.orbit[i]]]);

    std::vector<char> bad(on * m, 0);
    std::vector<std::uint32_t> row(on);
    for (std::uint32_t x = 0; x < degree; ++x) {
        row[0] = x;
        for (std::size_t i = 1; i < on; ++i)
            row[i] = lv.generators[lv.via_gen[i]][row[lv.parent_pos[i]]];
        for (std::size_t i = 0; i < on; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (!bad[i * m + j] && lv.generators[j][row[i]] != row[tpos[i * m + j]])
                    bad[i * m + j] = 1;
    }

    std::vector<Permutation> out;
    std::set<Permutation> seen;
    for (std::size_t i = 0; i < on; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (!bad[i * m + j])
                continue;
            std::vector<std::uint32_t> ui = transversal_images(lv, i, degree);
            std::vector<std::uint32_t> ut = transversal_images(lv, tpos[i * m + j], degree);
            std::vector<std::uint32_t> ut_inv(degree);
            for (std::uint32_t x = 0; x < degree; ++x)
                ut_inv[ut[x]] = x;
            std::vector<std::uint32_t> img(degree);
            const Permutation& g = lv.generators[j];
            for (std::uint32_t x = 0; x < degree; ++x)
                img[x] = ut_inv[g[ui[x]]];
            Permutation sigma = Permutation::from_images(std::move(img));
            if (seen.insert(sigma).second)
                out.push_back(std::move(sigma));
        }
    }
    return out;
}

} // namespace

std::uint64_t StabilizerChain::order() const {
    std::uint64_t n = 1;
    for (const auto& lv : levels)
        n *= lv.orbit.size();
    return n;
}

Permutation StabilizerChain::transversal(std::size_t level, std::size_t pos) const {
    return Permutation::from_images(transversal_images(levels[level], pos, degree));
}

bool StabilizerChain::contains(const Permutation& p) const {
    if (p.degree() != degree)
        throw BadParam("membership test across different degrees");
    Permutation r = p;
    for (std::size_t li = 0; li < levels.size(); ++li) {
        const auto& lv = levels[li];
        std::uint32_t x = r[lv.base];
        if (lv.pos_of[x] < 0)
            return false;
        r = r * transversal(li, static_cast<std::size_t>(lv.pos_of[x])).inverse();
    }
    return r.is_identity();
}

StabilizerChain stabilizer_chain(const PermutationGroup& g) {
    StabilizerChain chain;
    chain.degree = g.degree;
    std::vector<Permutation> gens = clean_generators(g.generators, g.degree);
    while (!gens.empty()) {
        std::int64_t base = smallest_moved_point(gens, chain.degree);
        StabilizerChain::Level lv =
            make_level(chain.degree, std::move(gens), static_cast<std::uint32_t>(base));
        gens = stabilizer_generators(lv, chain.degree);
        chain.levels.push_back(std::move(lv));
    }
    return chain;
}

std::uint64_t group_order(const PermutationGroup& g) {
    return stabilizer_chain(g).order();
}

std::vector<Permutation> subgroup_elements(const PermutationGroup& g, std::size_t cap) {
    for (const auto& gen : g.generators)
        if (gen.degree() != g.degree)
            throw BadParam("generator degree does not match the group degree");
    std::vector<Permutation> elements;
    std::set<Permutation> seen;
    Permutation id(g.degree);
    seen.insert(id);
    if (seen.size() > cap)
        throw CapExceeded("element enumeration exceeded cap of " + std::to_string(cap));
    elements.push_back(std::move(id));
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (const auto& gen : g.generators) {
            Permutation next = elements[i] * gen;
            if (seen.insert(next).second) {
                if (seen.size() > cap)
                    throw CapExceeded("element enumeration exceeded cap of " +
                                      std::to_string(cap));
                elements.push_back(std::move(next));
            }
        }
    }
    return elements;
}

std::vector<Permutation> intersect_subgroups(std::vector<Permutation> a,
                                             std::vector<Permutation> b) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    std::vector<Permutation> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

PermutationGroup normal_closure(const PermutationGroup& g,
                                const std::vector<Permutation>& seed) {
    PermutationGroup n{g.degree, clean_generators(seed, g.degree)};
    if (n.generators.empty())
        return n;
    StabilizerChain chain = stabilizer_chain(n);
    std::vector<Permutation> conj_inv;
    conj_inv.reserve(g.generators.size());
    for (const auto& c : g.generators)
        conj_inv.push_back(c.inverse());
    for (std::size_t i = 0; i < n.generators.size(); ++i) {
        for (std::size_t j = 0; j < g.generators.size(); ++j) {
            Permutation c = conj_inv[j] * n.generators[i] * g.generators[j];
            if (!chain.contains(c)) {
                n.generators.push_back(std::move(c));
                chain = stabilizer_chain(n);
            }
        }
    }
    return n;
}

namespace {

// Specialization for groups acting freely on the base point: every element
// is pinned down by the image of the base, so orders fall out of orbit
// sizes and membership tests are single lookups. Coset tables over the
// trivial subgroup always land here, and the chain-per-term route would be
// far too slow for them.
void derived_series_free(DerivedSeries& ds, std::uint32_t base) {
    const std::size_t n = ds.terms[0].degree;
    std::vector<Permutation> gens = clean_generators(ds.terms[0].generators, n);
    std::vector<char> in_orbit(n, 0);
    std::vector<std::uint32_t> orbit;

    while (ds.orders.back() > 1) {
        std::vector<Permutation> inv;
        inv.reserve(gens.size());
        for (const auto& x : gens)
            inv.push_back(x.inverse());

        // Distinct nontrivial commutators of the term's generators,
        // recognized by their base image alone.
        std::vector<char> seen_img(n, 0);
        std::vector<Permutation> sub;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            for (std::size_t j = i + 1; j < gens.size(); ++j) {
                std::uint32_t b = gens[j][gens[i][inv[j][inv[i][base]]]];
                if (b == base || seen_img[b])
                    continue;
                seen_img[b] = 1;
                std::vector<std::uint32_t> img(n);
                for (std::uint32_t x = 0; x < n; ++x)
                    img[x] = gens[j][gens[i][inv[j][inv[i][x]]]];
                sub.push_back(Permutation::from_images(std::move(img)));
            }
        }

        auto recompute_orbit = [&]() {
            std::fill(in_orbit.begin(), in_orbit.end(), 0);
            orbit.assign(1, base);
            in_orbit[base] = 1;
            for (std::size_t i = 0; i < orbit.size(); ++i) {
                for (const auto& s : sub) {
                    std::uint32_t t = s[orbit[i]];
                    if (!in_orbit[t]) {
                        in_orbit[t] = 1;
                        orbit.push_back(t);
                    }
                }
            }
        };
        recompute_orbit();

        // Close under conjugation by the term's generators. A conjugate is
        // already inside exactly when its base image sits in the orbit.
        for (std::size_t si = 0; si < sub.size(); ++si) {
            for (std::size_t cj = 0; cj < gens.size(); ++cj) {
                std::uint32_t b = gens[cj][sub[si][inv[cj][base]]];
                if (in_orbit[b])
                    continue;
                std::vector<std::uint32_t> img(n);
                for (std::uint32_t x = 0; x < n; ++x)
                    img[x] = gens[cj][sub[si][inv[cj][x]]];
                sub.push_back(Permutation::from_images(std::move(img)));
                recompute_orbit();
            }
        }

        std::uint64_t order = orbit.size();
        ds.terms.push_back(PermutationGroup{n, sub});
        bool stalled = order == ds.orders.back();
        ds.orders.push_back(order);
        if (stalled || order == 1)
            break;
        gens = std::move(sub);
    }
}

void derived_series_general(DerivedSeries& ds) {
    while (ds.orders.back() > 1) {
        const PermutationGroup& term = ds.terms.back();
        std::vector<Permutation> comms;
        for (std::size_t i = 0; i < term.generators.size(); ++i)
            for (std::size_t j = i + 1; j < term.generators.size(); ++j)
                comms.push_back(term.generators[i].inverse() * term.generators[j].inverse() *
                                term.generators[i] * term.generators[j]);
        PermutationGroup next = normal_closure(term, comms);
        std::uint64_t order = group_order(next);
        bool stalled = order == ds.orders.back();
        ds.terms.push_back(std::move(next));
        ds.orders.push_back(order);
        if (stalled || order == 1)
            break;
    }
}

} // namespace

DerivedSeries derived_series(const PermutationGroup& g) {
    DerivedSeries ds;
    ds.terms.push_back(g);
    StabilizerChain chain = stabilizer_chain(g);
    ds.orders.push_back(chain.order());
    if (ds.orders.back() == 1)
        return ds;
    if (chain.levels.size() == 1)
        derived_series_free(ds, chain.levels[0].base);
    else
        derived_series_general(ds);
    return ds;
}

bool is_solvable(const PermutationGroup& g) {
    return derived_series(g).solvable();
}

} // namespace stringc
