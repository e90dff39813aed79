#include "doctest.h"

#include <regex>
#include <string>

#include "stringc/errors.hpp"
#include "stringc/verify.hpp"

using namespace stringc;

namespace {

std::string strip_timing(const std::string& jsonl) {
    static const std::regex timing("\"elapsed_ms\":[0-9]+");
    return std::regex_replace(jsonl, timing, "\"elapsed_ms\":0");
}

Certificate with_order_and_type(std::uint64_t order, std::vector<std::uint64_t> type) {
    Certificate c;
    c.order = order;
    c.schlafli = std::move(type);
    return c;
}

} // namespace

TEST_CASE("the degenerate suite passes on the default grid") {
    std::vector<CertifiedPoint> corpus;
    std::vector<ClaimReport> reports = verify_prop21({}, &corpus);
    CHECK(reports.size() == 30);
    for (const ClaimReport& r : reports) {
        CHECK(r.claim == "prop21.cert");
        CHECK(r.pass);
        CHECK(r.params.contains("k"));
        CHECK(r.params.contains("variant"));
    }
    CHECK(corpus.size() == 30);
    CHECK(corpus[0].suite == "prop21");
    CHECK(corpus[0].cert.order == 8);
}

TEST_CASE("limit hits become failing claims without aborting the grid") {
    VerifyOptions opts;
    opts.limits.max_cosets = 4;
    std::vector<ClaimReport> reports = verify_prop21(opts);
    CHECK(reports.size() == 30);
    for (const ClaimReport& r : reports) {
        CHECK_FALSE(r.pass);
        CHECK(r.observed.rfind("limit: ", 0) == 0);
    }
}

TEST_CASE("divisibility on single certificates") {
    CHECK(verify_divisibility(with_order_and_type(192, {12, 4}), 3));
    CHECK(verify_divisibility(with_order_and_type(192, {6, 6}), 3));
    CHECK_FALSE(verify_divisibility(with_order_and_type(6, {5, 5}), 3));

    // Orders without the 2^a * p shape are out of scope.
    CHECK_THROWS_AS(verify_divisibility(with_order_and_type(64, {4, 4}), 3), NotApplicable);
    CHECK_THROWS_AS(verify_divisibility(with_order_and_type(90, {6, 6}), 3), NotApplicable);
    CHECK_THROWS_AS(verify_divisibility(with_order_and_type(192, {6, 6}), 9), NotApplicable);
    CHECK_THROWS_AS(verify_divisibility(with_order_and_type(192, {6, 6}), 5), NotApplicable);
}

TEST_CASE("the corpus sweep keeps only prime-times-power orders") {
    std::vector<CertifiedPoint> corpus;
    corpus.push_back({"a", {{"i", 1}}, with_order_and_type(192, {6, 6})}); // fits
    corpus.push_back({"a", {{"i", 2}}, with_order_and_type(64, {4, 4})});  // no odd part
    corpus.push_back({"a", {{"i", 3}}, with_order_and_type(480, {6, 6})}); // odd part 15
    corpus.push_back({"a", {{"i", 4}}, with_order_and_type(40, {4, 4})});  // p = 5 missing

    std::vector<ClaimReport> reports = verify_divisibility(corpus);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].pass);
    CHECK(reports[0].params["p"] == 3);
    CHECK_FALSE(reports[1].pass);
    CHECK(reports[1].params["p"] == 5);
}

TEST_CASE("reports are deterministic across runs and thread counts") {
    VerifyOptions serial;
    VerifyOptions pooled;
    pooled.jobs = 4;
    std::string base = strip_timing(to_jsonl(verify_prop23(serial)));
    CHECK(base == strip_timing(to_jsonl(verify_prop23(serial))));
    CHECK(base == strip_timing(to_jsonl(verify_prop23(pooled))));
}
