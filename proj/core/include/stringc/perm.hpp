#pragma once
// Permutations, permutation groups, and deterministic stabilizer chains:
// order, membership, element enumeration, normal closure, derived series.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "stringc/errors.hpp"

namespace stringc {

// A permutation of {0, ..., degree-1}, stored as its image list. The
// one_based helpers exist because group-theoretic sources habitually write
// points starting at 1.
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::size_t degree); // identity

    static Permutation from_images(std::vector<std::uint32_t> zero_based_images);
    static Permutation from_one_based(const std::vector<std::uint32_t>& one_based_images);
    // Cycles over 1-based points; unlisted points are fixed.
    static Permutation from_cycles(std::size_t degree,
                                   const std::vector<std::vector<std::uint32_t>>& cycles);

    std::size_t degree() const { return img_.size(); }
    std::uint32_t operator[](std::uint32_t x) const { return img_[x]; }
    const std::vector<std::uint32_t>& images() const { return img_; }
    std::vector<std::uint32_t> one_based_images() const;

    bool is_identity() const;
    Permutation inverse() const;

    // a * b applies a first, then b: (a*b)[x] == b[a[x]].
    friend Permutation operator*(const Permutation& a, const Permutation& b);

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

  private:
    std::vector<std::uint32_t> img_;
};

// lcm of the cycle lengths.
std::uint64_t element_order(const Permutation& p);

struct PermutationGroup {
    std::size_t degree = 0;
    std::vector<Permutation> generators;
};

// A base-and-strong-generating structure built level by level. Transversals
// are kept as Schreier vectors (tree parent plus generator index) and
// materialized on demand; each level's point stabilizer is verified through
// an aggregated pointwise sweep over all Schreier generators, so the
// structure is deterministic and certifies the order it reports.
struct StabilizerChain {
    struct Level {
        std::uint32_t base = 0;
        std::vector<Permutation> generators;
        std::vector<Permutation> generator_inverses;
        std::vector<std::uint32_t> orbit;      // discovery order, orbit[0] == base
        std::vector<std::uint32_t> parent_pos; // orbit position of the tree parent
        std::vector<std::uint32_t> via_gen;    // generator index used from the parent
        std::vector<std::int64_t> pos_of;      // point -> orbit position, -1 outside
    };

    std::size_t degree = 0;
    std::vector<Level> levels; // empty for the trivial group

    std::uint64_t order() const;
    bool contains(const Permutation& p) const;
    // Element of the level's group mapping the level base to orbit[pos].
    Permutation transversal(std::size_t level, std::size_t pos) const;
};

StabilizerChain stabilizer_chain(const PermutationGroup& g);

std::uint64_t group_order(const PermutationGroup& g);

// Breadth-first element enumeration in discovery order, identity first.
// Throws CapExceeded when more than cap elements appear.
std::vector<Permutation> subgroup_elements(const PermutationGroup& g, std::size_t cap);

// Intersection of two element sets, returned sorted by image list.
std::vector<Permutation> intersect_subgroups(std::vector<Permutation> a,
                                             std::vector<Permutation> b);

// Smallest subgroup containing seed that is closed under conjugation by the
// generators of g. Seeds lying outside g are closed just the same.
PermutationGroup normal_closure(const PermutationGroup& g,
                                const std::vector<Permutation>& seed);

// g, g', g'', ... each term the normal closure of the commutators of the
// previous term's generators inside that term. Stops at the trivial group
// or when the order stops shrinking (the stalled term is kept so callers
// can see the stabilization). Orders are recorded alongside the terms so
// callers do not pay for a second chain construction.
struct DerivedSeries {
    std::vector<PermutationGroup> terms; // terms[0] is the input group
    std::vector<std::uint64_t> orders;   // orders[i] == |terms[i]|

    bool solvable() const { return !orders.empty() && orders.back() == 1; }
    // Number of strict steps down to the trivial group, -1 when the series
    // stalls above it. The trivial group has derived length 0.
    std::int64_t derived_length() const {
        return solvable() ? static_cast<std::int64_t>(terms.size()) - 1 : -1;
    }
};

DerivedSeries derived_series(const PermutationGroup& g);

bool is_solvable(const PermutationGroup& g);

} // namespace stringc
