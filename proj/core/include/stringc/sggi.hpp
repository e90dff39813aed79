#pragma once
// Certification of string groups generated by involutions: commutation and
// involution checks, type computation, the intersection property, and the
// quotient criterion for recognizing string C-groups through known images.

#include <cstdint>
#include <vector>

#include "stringc/coset_table.hpp"
#include "stringc/perm.hpp"
#include "stringc/word.hpp"

namespace stringc {

// Every generator an involution and non-adjacent generators commuting,
// checked on a faithful permutation image of the group.
bool check_string_property(const PermutationGroup& g);

// Orders of the products of adjacent generators; one entry fewer than the
// rank.
std::vector<std::uint64_t> schlafli_type(const PermutationGroup& g);

// Full intersection property: the standard subgroups spanned by every pair
// of generator subsets meet exactly in the subset intersection's standard
// subgroup. Subgroups are materialized element by element; cap bounds that
// (0 derives a bound from the pairwise product orders, ample whenever the
// generators are involutions).
bool check_intersection_property(const PermutationGroup& g, std::size_t cap = 0);

// Rank-3 criterion: with involutions and distinct adjacent generators it
// is enough that the two dihedral subgroups on adjacent pairs meet in the
// middle generator alone.
bool check_intersection_property_rank3(const PermutationGroup& g, std::size_t cap = 0);

struct Certificate {
    std::uint64_t order = 0;
    std::vector<std::uint64_t> schlafli;
    bool is_sggi = false;          // involutions and the commutation rule
    bool string_ok = false;        // the commutation rule alone
    bool intersection_ok = false;  // computed only for a certified sggi
    bool degenerate = false;       // some type entry is 2 or smaller
    bool solvable = false;
    std::int64_t derived_length = -1; // -1 when not solvable
    std::int64_t elapsed_ms = 0;
};

// Enumerates the group, takes its regular permutation image, and runs the
// full battery of checks on it.
Certificate certify(const Presentation& pres, const EnumerationLimits& limits = {});

// Conclusion of the quotient test between two rank-3 presentations mapping
// generator to generator: if the map is a homomorphism onto a certified
// string C-group and is injective on either adjacent dihedral subgroup,
// the source's intersection property follows from its image's.
struct QuotientCheck {
    bool holds = false;
    bool relators_ok = false; // source relators die in the target
    bool injective_front = false;
    bool injective_back = false;
};

QuotientCheck quotient_criterion(const Presentation& source, const Presentation& target,
                                 const EnumerationLimits& limits = {});

} // namespace stringc
