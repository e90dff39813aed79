#pragma once
// Deliberately naive reference implementations used to cross-check the
// library's fast paths. They favor obviousness over speed and share no
// logic with the code under test beyond the value types.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "stringc/perm.hpp"
#include "stringc/snf.hpp"

namespace stringc::oracle {

// Every element of the generated group, sorted, by breadth-first closure.
std::vector<Permutation> closure(const PermutationGroup& g);

// Derived series orders from all-pairs element commutators, ending with 1
// (solvable) or with a repeated order (stalled, not solvable).
std::vector<std::uint64_t> derived_series_orders(const PermutationGroup& g);

// Intersection property checked with explicit element sets of every pair
// of generator subsets.
bool intersection_property(const PermutationGroup& g);

// Determinant by cofactor expansion; requires a small square matrix.
mpz_class determinant(const IntMatrix& m);

} // namespace stringc::oracle
