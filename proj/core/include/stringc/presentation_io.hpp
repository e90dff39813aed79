#pragma once
// Text format for presentations and words.
//
// A presentation file is line oriented; '#' starts a comment. The first
// directive names the generators, the rest give one relator each:
//
//   gens: r0 r1 r2
//   rel: r0^2
//   rel: (r0 r1)^4
//   rel: [r0, (r1 r2)^4]
//
// Words multiply left to right by juxtaposition. A postfix ' inverts,
// ^k raises to an integer power, ^(w) conjugates (w' u w), [u, v] is the
// commutator u' v' u v, and 1 is the empty word.

#include <string>
#include <vector>

#include "stringc/word.hpp"

namespace stringc {

Word parse_word(const std::string& text, const std::vector<std::string>& generator_names);
std::string print_word(const Word& w, const std::vector<std::string>& generator_names);

Presentation parse_presentation(const std::string& text);
std::string print_presentation(const Presentation& p);

} // namespace stringc
