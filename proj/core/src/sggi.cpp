#include "stringc/sggi.hpp"

#include <algorithm>
#include <chrono>

namespace stringc {

namespace {

std::size_t default_cap(const PermutationGroup& g) {
    std::uint64_t max_pair = 1;
    for (std::size_t i = 0; i < g.generators.size(); ++i)
        for (std::size_t j = i + 1; j < g.generators.size(); ++j)
            max_pair = std::max(max_pair, element_order(g.generators[i] * g.generators[j]));
    return static_cast<std::size_t>(4 * max_pair + 16);
}

std::vector<Permutation> sorted_elements(const PermutationGroup& g, std::size_t cap) {
    std::vector<Permutation> e = subgroup_elements(g, cap);
    std::sort(e.begin(), e.end());
    return e;
}

} // namespace

bool check_string_property(const PermutationGroup& g) {
    for (const auto& gen : g.generators)
        if (element_order(gen) != 2)
            return false;
    for (std::size_t i = 0; i < g.generators.size(); ++i)
        for (std::size_t j = i + 2; j < g.generators.size(); ++j)
            if (g.generators[i] * g.generators[j] != g.generators[j] * g.generators[i])
                return false;
    return true;
}

std::vector<std::uint64_t> schlafli_type(const PermutationGroup& g) {
    std::vector<std::uint64_t> type;
    for (std::size_t i = 0; i + 1 < g.generators.size(); ++i)
        type.push_back(element_order(g.generators[i] * g.generators[i + 1]));
    return type;
}

bool check_intersection_property(const PermutationGroup& g, std::size_t cap) {
    const std::size_t r = g.generators.size();
    if (r >= 16)
        throw BadParam("too many generators for the subset sweep");
    if (cap == 0)
        cap = default_cap(g);
    const std::uint32_t full = (1u << r) - 1;
    std::vector<std::vector<Permutation>> elems(full + 1);
    for (std::uint32_t mask = 0; mask < full; ++mask) {
        PermutationGroup h{g.degree, {}};
        for (std::size_t i = 0; i < r; ++i)
            if (mask & (1u << i))
                h.generators.push_back(g.generators[i]);
        elems[mask] = sorted_elements(h, cap);
    }
    // Pairs involving the whole generator set hold automatically.
    for (std::uint32_t a = 0; a < full; ++a)
        for (std::uint32_t b = a + 1; b < full; ++b)
            if (intersect_subgroups(elems[a], elems[b]) != elems[a & b])
                return false;
    return true;
}

bool check_intersection_property_rank3(const PermutationGroup& g, std::size_t cap) {
    if (g.generators.size() != 3)
        throw BadParam("the rank-3 criterion needs exactly 3 generators");
    if (cap == 0)
        cap = default_cap(g);
    if (g.generators[0] == g.generators[1] || g.generators[1] == g.generators[2])
        return false;
    auto front = sorted_elements({g.degree, {g.generators[0], g.generators[1]}}, cap);
    auto back = sorted_elements({g.degree, {g.generators[1], g.generators[2]}}, cap);
    auto middle = sorted_elements({g.degree, {g.generators[1]}}, cap);
    return intersect_subgroups(front, back) == middle;
}

Certificate certify(const Presentation& pres, const EnumerationLimits& limits) {
    const auto t0 = std::chrono::steady_clock::now();
    CosetTable table = CosetTable::enumerate(pres, {}, limits);
    PermutationGroup g = table.coset_action();

    Certificate c;
    c.order = table.size();
    c.schlafli = schlafli_type(g);

    bool involutions = true;
    for (const auto& gen : g.generators)
        involutions = involutions && element_order(gen) == 2;
    c.string_ok = true;
    for (std::size_t i = 0; i < g.generators.size() && c.string_ok; ++i)
        for (std::size_t j = i + 2; j < g.generators.size() && c.string_ok; ++j)
            c.string_ok = g.generators[i] * g.generators[j] == g.generators[j] * g.generators[i];
    c.is_sggi = involutions && c.string_ok;

    if (c.is_sggi)
        c.intersection_ok = g.generators.size() == 3 ? check_intersection_property_rank3(g)
                                                     : check_intersection_property(g);

    for (std::uint64_t k : c.schlafli)
        c.degenerate = c.degenerate || k <= 2;

    DerivedSeries ds = derived_series(g);
    c.solvable = ds.solvable();
    c.derived_length = ds.derived_length();

    c.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    return c;
}

QuotientCheck quotient_criterion(const Presentation& source, const Presentation& target,
                                 const EnumerationLimits& limits) {
    if (source.rank() != 3 || target.rank() != 3)
        throw BadParam("the quotient criterion is implemented for rank 3");

    Certificate tc = certify(target, limits);
    if (!tc.is_sggi || !tc.intersection_ok)
        throw TargetNotCertified("the image group is not a certified string C-group");

    CosetTable src = CosetTable::enumerate(source, {}, limits);
    CosetTable tgt = CosetTable::enumerate(target, {}, limits);
    PermutationGroup sg = src.coset_action();
    PermutationGroup tg = tgt.coset_action();

    QuotientCheck q;
    q.relators_ok = true;
    for (const Word& w : source.relators())
        q.relators_ok = q.relators_ok && tgt.trace(0, w) == 0;
    q.injective_front = element_order(sg.generators[0] * sg.generators[1]) ==
                        element_order(tg.generators[0] * tg.generators[1]);
    q.injective_back = element_order(sg.generators[1] * sg.generators[2]) ==
                       element_order(tg.generators[1] * tg.generators[2]);
    q.holds = check_string_property(sg) && q.relators_ok &&
              (q.injective_front || q.injective_back);
    return q;
}

} // namespace stringc
