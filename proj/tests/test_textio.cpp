#include "doctest.h"

#include "stringc/errors.hpp"
#include "stringc/families.hpp"
#include "stringc/presentation_io.hpp"

using namespace stringc;

namespace {
const std::vector<std::string> kAB{"a", "b"};
Word gen(std::uint32_t g, std::int32_t sign = 1) { return Word::generator(g, sign); }
} // namespace

TEST_CASE("word parsing basics") {
    CHECK(parse_word("1", kAB).empty());
    CHECK(parse_word("a", kAB) == gen(0));
    CHECK(parse_word("a'", kAB) == gen(0, -1));
    CHECK(parse_word("a b", kAB) == gen(0) * gen(1));
    CHECK(parse_word("a^3", kAB) == word_power(gen(0), 3));
    CHECK(parse_word("a^-2", kAB) == word_power(gen(0), -2));
    CHECK(parse_word("(a b)^2", kAB) == word_power(gen(0) * gen(1), 2));
    CHECK(parse_word("a'^2", kAB) == word_power(gen(0), -2));
}

TEST_CASE("conjugation and commutator syntax") {
    Word a = gen(0);
    Word b = gen(1);
    CHECK(parse_word("a^(b)", kAB) == word_conjugate(a, b));
    CHECK(parse_word("a^(b a)", kAB) == word_conjugate(a, b * a));
    CHECK(parse_word("[a, b]", kAB) == word_commutator(a, b));
    CHECK(parse_word("[a b, b']", kAB) == word_commutator(a * b, inverse(b)));
    CHECK(parse_word("((a b)^2)^(b)", kAB) == word_conjugate(word_power(a * b, 2), b));
}

TEST_CASE("parse errors carry context") {
    CHECK_THROWS_AS(parse_word("c", kAB), ParseError);
    CHECK_THROWS_AS(parse_word("a^", kAB), ParseError);
    CHECK_THROWS_AS(parse_word("(a", kAB), ParseError);
    CHECK_THROWS_AS(parse_word("[a b]", kAB), ParseError);
    CHECK_THROWS_AS(parse_word("a 2", kAB), ParseError);
    CHECK_THROWS_AS(parse_word("a $", kAB), ParseError);
    CHECK_THROWS_AS(parse_word("a^99999999999999999999", kAB), ParseError);
}

TEST_CASE("word printing folds exact runs") {
    CHECK(print_word(Word{}, kAB) == "1");
    CHECK(print_word(gen(0), kAB) == "a");
    CHECK(print_word(gen(0, -1), kAB) == "a'");
    CHECK(print_word(word_power(gen(0), 3), kAB) == "a^3");
    CHECK(print_word(word_power(gen(0), -3), kAB) == "a'^3");
    CHECK(print_word(gen(0) * gen(1) * gen(1), kAB) == "a b^2");
}

TEST_CASE("presentation files parse with comments and blanks") {
    std::string text =
        "# sample\n"
        "gens: a b\n"
        "\n"
        "rel: a^2  # involution\n"
        "rel: [a, b]\n";
    Presentation p = parse_presentation(text);
    CHECK(p.rank() == 2);
    REQUIRE(p.relators().size() == 2);
    CHECK(p.relators()[0] == word_power(gen(0), 2));
    CHECK(p.relators()[1] == word_commutator(gen(0), gen(1)));
}

TEST_CASE("presentation file errors name the line") {
    CHECK_THROWS_WITH_AS(parse_presentation("rel: a\n"), doctest::Contains("line 1"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_presentation("gens: a\nrel: b\n"),
                         doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: a\ngens: b\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation(""), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: a\nnonsense\n"), ParseError);
}

TEST_CASE("parse print round-trip is the identity") {
    auto round = [](const Presentation& p) {
        Presentation q = parse_presentation(print_presentation(p));
        CHECK(q.generator_names() == p.generator_names());
        CHECK(q.relators() == p.relators());
    };
    round(build_degenerate(6, 1));
    round(build_type44(3, 2));
    round(build_type1(7, 2, 2, 3, 1));
    round(build_U());
    round(build_type2(2, 2));
}

TEST_CASE("printing uses the presentation's own names") {
    Presentation p({"x", "yy"}, {word_power(gen(0) * gen(1), 2)});
    std::string text = print_presentation(p);
    CHECK(text.find("gens: x yy") != std::string::npos);
    CHECK(text.find("rel: x yy x yy") != std::string::npos);
}
