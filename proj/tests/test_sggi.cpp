#include "doctest.h"

#include "oracles.hpp"
#include "stringc/coset_table.hpp"
#include "stringc/errors.hpp"
#include "stringc/families.hpp"
#include "stringc/presentation_io.hpp"
#include "stringc/sggi.hpp"

using namespace stringc;

namespace {

PermutationGroup image_of(const Presentation& p) {
    return CosetTable::enumerate(p, {}).coset_action();
}

PermutationGroup coxeter_s4() {
    return {4,
            {Permutation::from_cycles(4, {{1, 2}}),
             Permutation::from_cycles(4, {{2, 3}}),
             Permutation::from_cycles(4, {{3, 4}})}};
}

// Involutions whose outer generators coincide: the two dihedral subgroups
// are the whole group, so the intersection property fails.
Presentation folded_square() {
    return parse_presentation(
        "gens: r0 r1 r2\n"
        "rel: r0^2\nrel: r1^2\nrel: r2^2\n"
        "rel: (r0 r1)^4\n"
        "rel: r0 r2\n");
}

} // namespace

TEST_CASE("string property on permutation generators") {
    CHECK(check_string_property(coxeter_s4()));

    PermutationGroup bad{3,
                         {Permutation::from_cycles(3, {{1, 2}}),
                          Permutation::from_cycles(3, {{2, 3}}),
                          Permutation::from_cycles(3, {{1, 3}})}};
    CHECK_FALSE(check_string_property(bad)); // outer pair does not commute

    PermutationGroup rotation{3, {Permutation::from_cycles(3, {{1, 2, 3}})}};
    CHECK_FALSE(check_string_property(rotation)); // not an involution
}

TEST_CASE("schlafli type reads adjacent product orders") {
    CHECK(schlafli_type(coxeter_s4()) == std::vector<std::uint64_t>{3, 3});
    CHECK(schlafli_type(image_of(build_degenerate(5, 2))) ==
          std::vector<std::uint64_t>{2, 5});
    CHECK(schlafli_type(image_of(build_type44(2, 1))) == std::vector<std::uint64_t>{4, 4});
}

TEST_CASE("intersection property, full and rank-3, against the oracle") {
    auto agree = [](const PermutationGroup& g) {
        bool full = check_intersection_property(g);
        CHECK(full == oracle::intersection_property(g));
        if (g.generators.size() == 3)
            CHECK(full == check_intersection_property_rank3(g));
    };
    agree(coxeter_s4());
    agree(image_of(build_degenerate(3, 1)));
    agree(image_of(build_degenerate(8, 2)));
    agree(image_of(build_type44(3, 1)));
    agree(image_of(folded_square()));
    agree(image_of(parse_presentation(
        "gens: r0 r1 r2\nrel: r0^2\nrel: r1^2\nrel: r2^2\n"
        "rel: (r0 r1)^2\nrel: (r1 r2)^2\nrel: (r0 r2)^2\n")));
}

TEST_CASE("the folded square fails the intersection property") {
    PermutationGroup g = image_of(folded_square());
    CHECK(check_string_property(g));
    CHECK_FALSE(check_intersection_property_rank3(g));
    CHECK_FALSE(check_intersection_property(g));
}

TEST_CASE("rank guards") {
    PermutationGroup two{4,
                         {Permutation::from_cycles(4, {{1, 2}}),
                          Permutation::from_cycles(4, {{3, 4}})}};
    CHECK_THROWS_AS(check_intersection_property_rank3(two), BadParam);
    CHECK_THROWS_AS(check_intersection_property(
                        PermutationGroup{2, std::vector<Permutation>(16, Permutation(2))}),
                    BadParam);
}

TEST_CASE("tiny caps surface instead of silently truncating") {
    CHECK_THROWS_AS(check_intersection_property(coxeter_s4(), 2), CapExceeded);
}

TEST_CASE("certify fills the full certificate") {
    Certificate c = certify(build_degenerate(6, 1));
    CHECK(c.order == 24);
    CHECK(c.schlafli == std::vector<std::uint64_t>{6, 2});
    CHECK(c.is_sggi);
    CHECK(c.string_ok);
    CHECK(c.intersection_ok);
    CHECK(c.degenerate);
    CHECK(c.solvable);
    CHECK(c.derived_length == 2);

    c = certify(build_type2(1, 1));
    CHECK(c.order == 192);
    CHECK(c.schlafli == std::vector<std::uint64_t>{6, 6});
    CHECK(c.is_sggi);
    CHECK(c.intersection_ok);
    CHECK_FALSE(c.degenerate);
    CHECK(c.solvable);
}

TEST_CASE("certify on a non-sggi presentation") {
    Certificate c = certify(parse_presentation("gens: a\nrel: a^3\n"));
    CHECK(c.order == 3);
    CHECK(c.schlafli.empty());
    CHECK_FALSE(c.is_sggi);
    CHECK_FALSE(c.intersection_ok);
    CHECK_FALSE(c.degenerate);
    CHECK(c.solvable);

    c = certify(folded_square());
    CHECK(c.is_sggi);
    CHECK_FALSE(c.intersection_ok);
}

TEST_CASE("quotient criterion through a certified image") {
    QuotientCheck q = quotient_criterion(build_degenerate(8, 1), build_degenerate(4, 1));
    CHECK(q.relators_ok);
    CHECK_FALSE(q.injective_front); // orders 8 versus 4
    CHECK(q.injective_back);        // both 2
    CHECK(q.holds);

    q = quotient_criterion(build_degenerate(4, 1), build_degenerate(8, 1));
    CHECK_FALSE(q.relators_ok); // (r0 r1)^4 does not die in the larger group
    CHECK_FALSE(q.holds);

    auto [g1, g2] = build_type1_chain(7, 2, 3, 1, 3);
    q = quotient_criterion(g1, g2);
    CHECK(q.relators_ok);
    CHECK(q.injective_front);
    CHECK_FALSE(q.injective_back); // orders 24 versus 4
    CHECK(q.holds);

    CHECK_THROWS_AS(quotient_criterion(build_degenerate(4, 1), folded_square()),
                    TargetNotCertified);
    CHECK_THROWS_AS(
        quotient_criterion(parse_presentation("gens: a\nrel: a^2\n"), build_degenerate(4, 1)),
        BadParam);
}
