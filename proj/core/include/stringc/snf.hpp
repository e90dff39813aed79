#pragma once
// Integer matrices, Smith normal form, and abelian invariants.

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace stringc {

// Dense row-major integer matrix. Entries are plain int64; the reduction
// promotes to arbitrary precision internally if intermediate values
// overflow, so results are always exact.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::int64_t> a;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    std::int64_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    std::int64_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Diagonal of the Smith normal form, padded with zeros to length cols.
// Nonzero entries come first and each divides the next; reading m as a
// relation matrix (one row per relation over cols generators), the result
// is the invariant factor decomposition of Z^cols modulo the row lattice.
std::vector<mpz_class> smith_normal_form(const IntMatrix& m);

struct AbelianInvariants {
    std::vector<mpz_class> torsion; // invariant factors > 1, in divisibility order
    std::size_t free_rank = 0;
};

AbelianInvariants abelian_invariants(const IntMatrix& relations);

} // namespace stringc
