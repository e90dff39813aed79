#pragma once
// Builders for the rank-3 presentation families the tools certify, all on
// generators r0, r1, r2.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stringc/word.hpp"

namespace stringc {

// The cube-order families are tagged G, H, I in order; these convert
// between the tag letter and the 1-based index. family_from_tag throws
// BadParam on anything else.
std::string family_tag(int family);
int family_from_tag(const std::string& tag);

// Order 4k: type (k,2) for variant 1, type (2,k) for variant 2. k >= 2.
Presentation build_degenerate(std::uint64_t k, int variant);

// Type (4,4): order 8b^2 for variant 1, order 16b^2 for variant 2. b >= 2.
Presentation build_type44(std::uint64_t b, int variant);

// Order 2^n*l1*l2 with type (2^s*l1, 2^t*l2), for s,t >= 2, odd l1 and l2,
// and n >= s+t+1.
Presentation build_type1(std::uint32_t n, std::uint32_t s, std::uint32_t t, std::uint64_t l1,
                         std::uint64_t l2);

// The two successive quotients used to factor the order of build_type1:
// first capping the (r0 r1) order at 4 (order 2^(n-s+2)*l2), then also the
// (r1 r2) order (order 2^(n-s-t+4)).
std::pair<Presentation, Presentation> build_type1_chain(std::uint32_t n, std::uint32_t s,
                                                        std::uint32_t t, std::uint64_t l1,
                                                        std::uint64_t l2);

// The common infinite type (6,6) base group of the three cube-order
// families.
Presentation build_U();

// Finite type (6,6) quotients: orders 192m^3, 384m^3, 768m^3 for families
// 1, 2, 3. m >= 1.
Presentation build_type2(int family, std::uint64_t m);

// Generating words of the rank-3 free abelian normal subgroup whose
// quotients the type2 families are; indices 192, 384, 768 in build_U().
struct SubgroupSpec {
    int family = 0;
    std::vector<Word> generators;
};

SubgroupSpec subgroup_generators(int family);

// The unique (family, m) pair with m a power of two whose build_type2
// order is 3*2^n. Defined for n >= 6.
struct Type2Point {
    int family = 0;
    std::uint64_t m = 0;
};

Type2Point type2_for_exponent(std::uint32_t n);

} // namespace stringc
