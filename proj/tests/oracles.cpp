#include "oracles.hpp"

#include <algorithm>
#include <set>

namespace stringc::oracle {
namespace {

std::vector<Permutation> closure_of(std::uint32_t degree,
                                    const std::vector<Permutation>& generators) {
    std::set<Permutation> seen;
    std::vector<Permutation> queue;
    Permutation identity(degree);
    seen.insert(identity);
    queue.push_back(identity);
    while (!queue.empty()) {
        Permutation current = queue.back();
        queue.pop_back();
        for (const Permutation& gen : generators) {
            Permutation next = current * gen;
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return {seen.begin(), seen.end()};
}

Permutation commutator(const Permutation& x, const Permutation& y) {
    return x.inverse() * y.inverse() * x * y;
}

} // namespace

std::vector<Permutation> closure(const PermutationGroup& g) {
    return closure_of(g.degree, g.generators);
}

std::vector<std::uint64_t> derived_series_orders(const PermutationGroup& g) {
    std::vector<std::uint64_t> orders;
    std::vector<Permutation> elements = closure(g);
    orders.push_back(elements.size());
    while (orders.back() != 1) {
        std::set<Permutation> commutators;
        for (const Permutation& x : elements)
            for (const Permutation& y : elements) commutators.insert(commutator(x, y));
        std::vector<Permutation> next =
            closure_of(g.degree, {commutators.begin(), commutators.end()});
        bool stalled = next.size() == elements.size();
        orders.push_back(next.size());
        if (stalled) break;
        elements = std::move(next);
    }
    return orders;
}

bool intersection_property(const PermutationGroup& g) {
    std::size_t rank = g.generators.size();
    std::vector<std::vector<Permutation>> elements(std::size_t{1} << rank);
    for (std::size_t mask = 0; mask < elements.size(); ++mask) {
        std::vector<Permutation> picked;
        for (std::size_t i = 0; i < rank; ++i)
            if (mask & (std::size_t{1} << i)) picked.push_back(g.generators[i]);
        elements[mask] = closure_of(g.degree, picked);
    }
    for (std::size_t a = 0; a < elements.size(); ++a) {
        for (std::size_t b = 0; b < elements.size(); ++b) {
            std::vector<Permutation> common;
            std::set_intersection(elements[a].begin(), elements[a].end(),
                                  elements[b].begin(), elements[b].end(),
                                  std::back_inserter(common));
            if (common != elements[a & b]) return false;
        }
    }
    return true;
}

mpz_class determinant(const IntMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant needs a square matrix");
    std::vector<std::size_t> cols(m.cols);
    for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;

    // Cofactor expansion along the first remaining row, recursing on the
    // still-active column set.
    auto expand = [&](auto&& self, std::size_t row, std::vector<std::size_t>& active) {
        if (active.empty()) return mpz_class{1};
        mpz_class total = 0;
        for (std::size_t i = 0; i < active.size(); ++i) {
            std::int64_t entry = m.at(row, active[i]);
            if (entry == 0) continue;
            std::size_t col = active[i];
            active.erase(active.begin() + static_cast<std::ptrdiff_t>(i));
            mpz_class minor = self(self, row + 1, active);
            active.insert(active.begin() + static_cast<std::ptrdiff_t>(i), col);
            mpz_class term = minor * entry;
            if (i % 2 == 1) term = -term;
            total += term;
        }
        return total;
    };
    return expand(expand, 0, cols);
}

} // namespace stringc::oracle
