#include "stringc/families.hpp"

#include "stringc/errors.hpp"

namespace stringc {

namespace {

const std::vector<std::string> kNames{"r0", "r1", "r2"};

Word g(std::uint32_t i) { return Word::generator(i); }

std::vector<Word> involutions() {
    return {word_power(g(0), 2), word_power(g(1), 2), word_power(g(2), 2)};
}

void require(bool ok, const char* what) {
    if (!ok)
        throw BadParam(what);
}

// Keeps single relators from ballooning past a few million letters.
constexpr std::uint64_t kMaxRelatorHalfLength = std::uint64_t{1} << 22;

Word parity_relator(std::uint32_t d) {
    if (d % 2 == 1)
        return word_power(word_commutator(word_power(g(0) * g(1), 2), g(2)),
                          std::int64_t{1} << ((d - 1) / 2));
    return word_power(word_commutator(word_power(g(0) * g(1), 2), word_power(g(1) * g(2), 2)),
                      std::int64_t{1} << ((d - 2) / 2));
}

void check_type1_params(std::uint32_t n, std::uint32_t s, std::uint32_t t, std::uint64_t l1,
                        std::uint64_t l2) {
    require(s >= 2, "s must be at least 2");
    require(t >= 2, "t must be at least 2");
    require(l1 % 2 == 1, "l1 must be odd");
    require(l2 % 2 == 1, "l2 must be odd");
    require(n >= s + t + 1, "n must be at least s + t + 1");
    require(n - s - t <= 40, "n - s - t larger than 40 is not supported");
    require(s <= 40 && l1 <= kMaxRelatorHalfLength && (l1 << s) <= kMaxRelatorHalfLength,
            "2^s * l1 exceeds the supported relator length");
    require(t <= 40 && l2 <= kMaxRelatorHalfLength && (l2 << t) <= kMaxRelatorHalfLength,
            "2^t * l2 exceeds the supported relator length");
}

// The three defining words of each family, with e the exponent on the
// repeated core. The relators of build_type2 use e scaled by m; the
// subgroup generators use the base e.
std::vector<Word> family_words(int family, std::uint64_t e) {
    switch (family) {
    case 1: {
        Word u = word_power(g(0) * g(2) * g(1), static_cast<std::int64_t>(e));
        Word v = word_power(g(2) * g(1) * g(0), static_cast<std::int64_t>(e));
        return {word_conjugate(u, g(1)), v, word_conjugate(v, g(1))};
    }
    case 2: {
        Word u = word_power(word_power(g(1) * g(2), 3) * word_power(g(0) * g(1), 3),
                            static_cast<std::int64_t>(e));
        return {word_conjugate(u, g(0) * g(1)), word_conjugate(u, g(2)),
                word_conjugate(u, g(2) * g(1))};
    }
    case 3: {
        Word u = word_power(word_power(g(0) * g(1), 2) * word_power(g(2) * g(1), 2),
                            static_cast<std::int64_t>(e));
        Word v = word_power(word_power(g(1) * g(2), 2) * word_power(g(1) * g(0), 2),
                            static_cast<std::int64_t>(e));
        Word w = word_power(word_power(g(1) * g(0), 2) * word_power(g(1) * g(2), 2),
                            static_cast<std::int64_t>(e));
        return {word_conjugate(u, g(0)), v, word_conjugate(w, g(2))};
    }
    default:
        throw BadParam("family must be 1, 2, or 3");
    }
}

std::uint64_t family_base_exponent(int family) {
    switch (family) {
    case 1: return 4;
    case 2: return 2;
    case 3: return 3;
    default: throw BadParam("family must be 1, 2, or 3");
    }
}

} // namespace

std::string family_tag(int family) {
    switch (family) {
    case 1: return "G";
    case 2: return "H";
    case 3: return "I";
    default: throw BadParam("family index must be 1, 2, or 3");
    }
}

int family_from_tag(const std::string& tag) {
    if (tag == "G") return 1;
    if (tag == "H") return 2;
    if (tag == "I") return 3;
    throw BadParam("family tag must be G, H, or I");
}

Presentation build_degenerate(std::uint64_t k, int variant) {
    require(k >= 2, "k must be at least 2");
    require(variant == 1 || variant == 2, "variant must be 1 or 2");
    require(k <= kMaxRelatorHalfLength, "k exceeds the supported relator length");
    std::vector<Word> rel = involutions();
    rel.push_back(word_power(g(0) * g(1), static_cast<std::int64_t>(variant == 1 ? k : 2)));
    rel.push_back(word_power(g(1) * g(2), static_cast<std::int64_t>(variant == 1 ? 2 : k)));
    rel.push_back(word_power(g(0) * g(2), 2));
    return Presentation(kNames, std::move(rel));
}

Presentation build_type44(std::uint64_t b, int variant) {
    require(b >= 2, "b must be at least 2");
    require(variant == 1 || variant == 2, "variant must be 1 or 2");
    require(b <= kMaxRelatorHalfLength, "b exceeds the supported relator length");
    std::vector<Word> rel = involutions();
    rel.push_back(word_power(g(0) * g(1), 4));
    rel.push_back(word_power(g(1) * g(2), 4));
    rel.push_back(word_power(g(0) * g(2), 2));
    if (variant == 1)
        rel.push_back(word_power(g(1) * g(0) * g(1) * g(2), static_cast<std::int64_t>(b)));
    else
        rel.push_back(word_power(g(0) * g(1) * g(2), static_cast<std::int64_t>(2 * b)));
    return Presentation(kNames, std::move(rel));
}

Presentation build_type1(std::uint32_t n, std::uint32_t s, std::uint32_t t, std::uint64_t l1,
                         std::uint64_t l2) {
    check_type1_params(n, s, t, l1, l2);
    std::vector<Word> rel = involutions();
    rel.push_back(word_power(g(0) * g(1), static_cast<std::int64_t>(l1 << s)));
    rel.push_back(word_power(g(1) * g(2), static_cast<std::int64_t>(l2 << t)));
    rel.push_back(word_power(g(0) * g(2), 2));
    rel.push_back(word_commutator(word_power(g(0) * g(1), 4), g(2)));
    rel.push_back(word_commutator(g(0), word_power(g(1) * g(2), 4)));
    rel.push_back(parity_relator(n - s - t));
    return Presentation(kNames, std::move(rel));
}

std::pair<Presentation, Presentation> build_type1_chain(std::uint32_t n, std::uint32_t s,
                                                        std::uint32_t t, std::uint64_t l1,
                                                        std::uint64_t l2) {
    check_type1_params(n, s, t, l1, l2);
    const std::uint32_t d = n - s - t;

    std::vector<Word> rel1 = involutions();
    rel1.push_back(word_power(g(0) * g(1), 4));
    rel1.push_back(word_power(g(1) * g(2), static_cast<std::int64_t>(l2 << t)));
    rel1.push_back(word_power(g(0) * g(2), 2));
    rel1.push_back(word_commutator(g(0), word_power(g(1) * g(2), 4)));
    rel1.push_back(parity_relator(d));

    std::vector<Word> rel2 = involutions();
    rel2.push_back(word_power(g(0) * g(1), 4));
    rel2.push_back(word_power(g(1) * g(2), 4));
    rel2.push_back(word_power(g(0) * g(2), 2));
    rel2.push_back(parity_relator(d));

    return {Presentation(kNames, std::move(rel1)), Presentation(kNames, std::move(rel2))};
}

Presentation build_U() {
    std::vector<Word> rel = involutions();
    rel.push_back(word_power(g(0) * g(1), 6));
    rel.push_back(word_power(g(1) * g(2), 6));
    rel.push_back(word_power(g(0) * g(2), 2));
    rel.push_back(word_power(g(2) * g(1) * g(0) * g(1), 3));
    return Presentation(kNames, std::move(rel));
}

Presentation build_type2(int family, std::uint64_t m) {
    require(m >= 1, "m must be at least 1");
    require(m <= 1024, "m larger than 1024 is not supported");
    Presentation u = build_U();
    std::vector<Word> rel = u.relators();
    for (Word& w : family_words(family, family_base_exponent(family) * m))
        rel.push_back(std::move(w));
    return Presentation(u.generator_names(), std::move(rel));
}

SubgroupSpec subgroup_generators(int family) {
    SubgroupSpec s;
    s.family = family;
    s.generators = family_words(family, family_base_exponent(family));
    return s;
}

Type2Point type2_for_exponent(std::uint32_t n) {
    if (n < 6)
        throw BadParam("no covered family has order 3*2^n below n = 6");
    Type2Point p;
    p.family = static_cast<int>((n - 6) % 3) + 1;
    p.m = std::uint64_t{1} << ((n - 6) / 3);
    return p;
}

} // namespace stringc
