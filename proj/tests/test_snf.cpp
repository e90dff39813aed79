#include "doctest.h"

#include <cstdint>
#include <initializer_list>

#include "oracles.hpp"
#include "stringc/snf.hpp"

using namespace stringc;

namespace {

IntMatrix matrix(std::size_t rows, std::size_t cols,
                 std::initializer_list<std::int64_t> entries) {
    IntMatrix m(rows, cols);
    std::size_t i = 0;
    for (std::int64_t e : entries) m.a[i++] = e;
    REQUIRE(i == rows * cols);
    return m;
}

mpz_class product(const std::vector<mpz_class>& xs) {
    mpz_class p = 1;
    for (const mpz_class& x : xs) p *= x;
    return p;
}

// A deterministic little generator, good enough to vary matrix entries.
std::uint64_t splitmix(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

TEST_CASE("known normal forms") {
    CHECK(smith_normal_form(matrix(2, 2, {2, 4, 6, 8})) ==
          std::vector<mpz_class>{2, 4});
    CHECK(smith_normal_form(matrix(2, 2, {1, 0, 0, 1})) ==
          std::vector<mpz_class>{1, 1});
    CHECK(smith_normal_form(matrix(2, 3, {6, 10, 15, 0, 0, 0})) ==
          std::vector<mpz_class>{1, 0, 0});
    CHECK(smith_normal_form(matrix(3, 3, {2, 0, 0, 0, 3, 0, 0, 0, 5})) ==
          std::vector<mpz_class>{1, 1, 30});
    CHECK(smith_normal_form(matrix(1, 1, {-7})) == std::vector<mpz_class>{7});
    CHECK(smith_normal_form(IntMatrix(0, 3)) == std::vector<mpz_class>{0, 0, 0});
    CHECK(smith_normal_form(IntMatrix(3, 0)).empty());
}

TEST_CASE("divisibility chain and determinant invariance") {
    std::uint64_t state = 41;
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + trial % 5;
        IntMatrix m(n, n);
        for (auto& e : m.a)
            e = static_cast<std::int64_t>(splitmix(state) % 41) - 20;

        std::vector<mpz_class> d = smith_normal_form(m);
        for (std::size_t i = 0; i + 1 < d.size(); ++i) {
            if (d[i + 1] == 0) continue;
            REQUIRE(d[i] != 0);
            CHECK(d[i + 1] % d[i] == 0);
        }

        mpz_class det = oracle::determinant(m);
        CHECK(product(d) == abs(det));
    }
}

TEST_CASE("rectangular shapes agree with the square oracle on minors") {
    // Padding a matrix with zero rows cannot change the normal form.
    IntMatrix m = matrix(2, 3, {4, 6, 8, 2, 5, 9});
    IntMatrix padded(4, 3);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) padded.at(i, j) = m.at(i, j);
    CHECK(smith_normal_form(m) == smith_normal_form(padded));
}

TEST_CASE("entries near the int64 edge promote instead of overflowing") {
    std::int64_t big = std::int64_t{1} << 62;
    IntMatrix m = matrix(2, 2, {big, big - 1, big - 3, big});
    std::vector<mpz_class> d = smith_normal_form(m);
    // The determinant is 4*big - 3, which no int64 product can reach.
    mpz_class det = mpz_class(big) * 4 - 3;
    CHECK(product(d) == det);
    for (std::size_t i = 0; i + 1 < d.size(); ++i) CHECK(d[i + 1] % d[i] == 0);
}

TEST_CASE("abelian invariants split torsion from free rank") {
    AbelianInvariants inv = abelian_invariants(matrix(2, 2, {2, 0, 0, 6}));
    CHECK(inv.torsion == std::vector<mpz_class>{2, 6});
    CHECK(inv.free_rank == 0);

    inv = abelian_invariants(IntMatrix(0, 3));
    CHECK(inv.torsion.empty());
    CHECK(inv.free_rank == 3);

    inv = abelian_invariants(matrix(1, 3, {2, 4, 6}));
    CHECK(inv.torsion == std::vector<mpz_class>{2});
    CHECK(inv.free_rank == 2);

    // Unit factors disappear.
    inv = abelian_invariants(matrix(2, 2, {1, 0, 0, 4}));
    CHECK(inv.torsion == std::vector<mpz_class>{4});
    CHECK(inv.free_rank == 0);
}
