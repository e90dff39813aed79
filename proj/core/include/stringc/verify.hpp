#pragma once
// Claim suites. Each suite walks a fixed parameter grid, certifies the
// groups it builds, and reports expected versus observed values one claim
// per point. Thrown errors and limit hits become failing claims, never
// aborts, so a grid always yields a full report set. Points are
// independent; `jobs` > 1 runs them on a small thread pool while keeping
// report order fixed.

#include <cstdint>
#include <string>
#include <vector>

#include "stringc/coset_table.hpp"
#include "stringc/report.hpp"
#include "stringc/sggi.hpp"

namespace stringc {

struct VerifyOptions {
    EnumerationLimits limits;
    int jobs = 1;
};

// A certificate remembered along with where it came from, so corpus-wide
// claims can run after the per-point ones.
struct CertifiedPoint {
    std::string suite;
    nlohmann::ordered_json params;
    Certificate cert;
};

// Orders 4k and degenerate types (k,2) / (2,k), k = 2..16.
std::vector<ClaimReport> verify_prop21(const VerifyOptions& opts = {},
                                       std::vector<CertifiedPoint>* sink = nullptr);

// Orders 8b^2 and 16b^2 of type (4,4), b = 2..6.
std::vector<ClaimReport> verify_prop23(const VerifyOptions& opts = {},
                                       std::vector<CertifiedPoint>* sink = nullptr);

// Orders 2^n*l1*l2 with type (2^s*l1, 2^t*l2) over the default grid, plus
// the two intermediate quotients whose orders factor each point's order.
std::vector<ClaimReport> verify_theorem4(const VerifyOptions& opts = {},
                                         std::vector<CertifiedPoint>* sink = nullptr);

// Orders 192m^3, 384m^3, 768m^3 of type (6,6) for m = 1, 2, plus the
// (family G, m = 3) point of order 5184.
std::vector<ClaimReport> verify_theorem5(const VerifyOptions& opts = {},
                                         std::vector<CertifiedPoint>* sink = nullptr);

// True when p divides a Schlafli entry of c. Requires c.order = 2^a * p
// with p an odd prime; anything else throws NotApplicable.
bool verify_divisibility(const Certificate& c, std::uint64_t p);

// The same check swept over every corpus certificate whose order has the
// 2^a * p shape; other orders are out of scope and produce no claim.
std::vector<ClaimReport> verify_divisibility(const std::vector<CertifiedPoint>& corpus);

// Index, normality, and free rank-3 abelianization of the distinguished
// subgroup of the infinite base group, one claim per family.
std::vector<ClaimReport> verify_subgroup_structure(const VerifyOptions& opts = {});

// Orders 3*2^n of type (6,6) through the exponent-to-family map, n = 6..9.
std::vector<ClaimReport> verify_cor52(const VerifyOptions& opts = {});

// All of the above in a fixed order; the divisibility sweep runs over the
// certificates the earlier suites produced.
std::vector<ClaimReport> verify_all(const VerifyOptions& opts = {});

} // namespace stringc
