#pragma once
// Serialization of certificates and claim checks. Key order is pinned and
// CSV carries no timing column, so reruns stay comparable.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "stringc/sggi.hpp"

namespace stringc {

// {order, schlafli, is_sggi, string_ok, intersection_ok, degenerate,
//  solvable, derived_length, params (when given), elapsed_ms}
nlohmann::ordered_json certificate_to_json(const Certificate& c,
                                           const nlohmann::ordered_json& params = {});

struct ClaimReport {
    std::string claim;
    nlohmann::ordered_json params; // flat object of the point checked
    std::string expected;
    std::string observed;
    bool pass = false;
    std::int64_t elapsed_ms = 0;
};

std::string to_jsonl(const std::vector<ClaimReport>& reports);
std::string to_csv(const std::vector<ClaimReport>& reports);

} // namespace stringc
