#pragma once
// Coset enumeration over a finitely presented group, plus the table-level
// derived data the rest of the library consumes: permutation images,
// Schreier transversals, and abelianized subgroup relation matrices.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "stringc/perm.hpp"
#include "stringc/snf.hpp"
#include "stringc/word.hpp"

namespace stringc {

struct EnumerationLimits {
    // Total number of coset rows the enumerator may allocate, dead rows
    // included. The default honors STRINGC_MAX_COSETS when set.
    std::size_t max_cosets = default_max_cosets();
    // Guard on elementary steps (definitions, scan moves, merges).
    std::uint64_t max_steps = 100'000'000;

    static std::size_t default_max_cosets();
};

// A completed, compacted coset table: cosets 0..size()-1 with coset 0 the
// subgroup itself, and one column per generator and formal inverse. All
// relators and subgroup generator words are verified to close before the
// table is handed out, so every accessor works on certified data.
class CosetTable {
  public:
    // Enumerates the cosets of the subgroup generated by the given words
    // (the whole group is the empty list). Throws LimitExceeded when the
    // limits bite.
    static CosetTable enumerate(const Presentation& pres, const std::vector<Word>& subgroup,
                                const EnumerationLimits& limits = {});

    std::size_t rank() const { return rank_; }
    std::size_t size() const { return n_; }

    std::uint32_t act(std::uint32_t coset, Letter l) const;
    std::uint32_t trace(std::uint32_t coset, const Word& w) const;

    Permutation generator_action(std::size_t gen) const;
    PermutationGroup coset_action() const;

    // Whether the word fixes every coset. With the table taken over a
    // subgroup H, all of H's generators acting trivially is exactly
    // normality of H.
    bool acts_trivially(const Word& w) const;

    // Prefix-closed coset representatives found breadth-first over the
    // positive generator columns; entry 0 is the empty word.
    std::vector<Word> schreier_transversal() const;

    // Relation matrix for the abelianization of the subgroup the table was
    // built over: one column per non-tree Schreier generator, one row per
    // (coset, relator) pair.
    IntMatrix abelianized_subgroup_relations(const Presentation& pres) const;

  private:
    std::size_t rank_ = 0;
    std::size_t n_ = 0;
    std::vector<std::uint32_t> tab_; // n_ rows, 2*rank_ columns

    std::uint32_t cell(std::size_t coset, std::size_t col) const {
        return tab_[coset * 2 * rank_ + col];
    }
};

} // namespace stringc
