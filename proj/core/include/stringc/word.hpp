#pragma once
// Freely reduced words over an indexed generator alphabet, finite
// presentations built from them, and generator substitution maps.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "stringc/errors.hpp"

namespace stringc {

// One letter of a word: a generator index with a sign, {g, -1} being the
// formal inverse of generator g. Signs are kept even when a presentation
// later makes a generator an involution.
struct Letter {
    std::uint32_t gen = 0;
    std::int32_t sign = 1;

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

inline Letter inverse(Letter l) { return {l.gen, -l.sign}; }

// Cancels adjacent (g, s)(g, -s) pairs until none remain. Idempotent.
std::vector<Letter> free_reduce(const std::vector<Letter>& letters);

// A word in free reduction normal form. Construction and every operation
// reduce eagerly, so a stored Word never contains a cancelling pair.
class Word {
  public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(free_reduce(letters)) {}

    static Word generator(std::uint32_t g, std::int32_t sign = 1) {
        Word w;
        w.letters_.push_back({g, sign < 0 ? -1 : 1});
        return w;
    }

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    // Largest generator index used, or -1 for the empty word.
    std::int64_t max_generator() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

  private:
    std::vector<Letter> letters_;
};

Word operator*(const Word& a, const Word& b);
Word inverse(const Word& w);

// w^e; negative e inverts, e == 0 gives the empty word.
Word word_power(const Word& w, std::int64_t e);

// c^-1 w c, freely reduced.
Word word_conjugate(const Word& w, const Word& c);

// x^-1 y^-1 x y, freely reduced.
Word word_commutator(const Word& x, const Word& y);

// A finite presentation: named generators and freely reduced relators.
// Relators that reduce to the empty word are dropped. Generator names must
// be unique, nonempty identifiers ([A-Za-z_][A-Za-z0-9_]*), so that every
// presentation can round-trip through the text format.
class Presentation {
  public:
    Presentation(std::vector<std::string> generator_names, std::vector<Word> relators);

    std::size_t rank() const { return names_.size(); }
    const std::vector<std::string>& generator_names() const { return names_; }
    const std::vector<Word>& relators() const { return relators_; }

  private:
    std::vector<std::string> names_;
    std::vector<Word> relators_;
};

// Maps generator i of a source alphabet to a word over a target alphabet.
class GeneratorMap {
  public:
    explicit GeneratorMap(std::vector<Word> images) : images_(std::move(images)) {}

    std::size_t source_rank() const { return images_.size(); }
    const std::vector<Word>& images() const { return images_; }

    // Substitutes every letter and reduces. Throws BadWord if w uses a
    // generator with no image.
    Word apply(const Word& w) const;

  private:
    std::vector<Word> images_;
};

} // namespace stringc
