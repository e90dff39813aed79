#include "doctest.h"

#include "stringc/report.hpp"

using namespace stringc;

namespace {

Certificate sample_certificate() {
    Certificate c;
    c.order = 192;
    c.schlafli = {6, 6};
    c.is_sggi = true;
    c.string_ok = true;
    c.intersection_ok = true;
    c.degenerate = false;
    c.solvable = true;
    c.derived_length = 3;
    c.elapsed_ms = 7;
    return c;
}

} // namespace

TEST_CASE("certificate json key order is pinned") {
    std::string dumped = certificate_to_json(sample_certificate()).dump();
    CHECK(dumped ==
          "{\"order\":192,\"schlafli\":[6,6],\"is_sggi\":true,\"string_ok\":true,"
          "\"intersection_ok\":true,\"degenerate\":false,\"solvable\":true,"
          "\"derived_length\":3,\"elapsed_ms\":7}");
}

TEST_CASE("certificate json carries params only when given") {
    nlohmann::ordered_json params{{"family", "G"}, {"m", 2}};
    nlohmann::ordered_json with = certificate_to_json(sample_certificate(), params);
    CHECK(with.contains("params"));
    CHECK(with["params"]["family"] == "G");

    nlohmann::ordered_json without = certificate_to_json(sample_certificate());
    CHECK_FALSE(without.contains("params"));
}

TEST_CASE("jsonl emits one record per line in order") {
    ClaimReport a{"x.first", {{"k", 1}}, "1", "1", true, 3};
    ClaimReport b{"x.second", {}, "2", "3", false, 4};
    std::string lines = to_jsonl({a, b});
    CHECK(lines ==
          "{\"claim\":\"x.first\",\"params\":{\"k\":1},\"expected\":\"1\","
          "\"observed\":\"1\",\"pass\":true,\"elapsed_ms\":3}\n"
          "{\"claim\":\"x.second\",\"params\":{},\"expected\":\"2\","
          "\"observed\":\"3\",\"pass\":false,\"elapsed_ms\":4}\n");
}

TEST_CASE("csv quotes fields that need it and skips timing") {
    ClaimReport tricky{"c,laim", {{"k", 1}}, "say \"hi\"", "line\nbreak", false, 99};
    std::string csv = to_csv({tricky});
    CHECK(csv ==
          "claim,params,expected,observed,pass\n"
          "\"c,laim\",\"{\"\"k\"\":1}\",\"say \"\"hi\"\"\",\"line\nbreak\",false\n");
    CHECK(csv.find("99") == std::string::npos);
}

TEST_CASE("csv leaves plain fields unquoted") {
    ClaimReport plain{"simple", nlohmann::ordered_json::object(), "a", "a", true, 1};
    CHECK(to_csv({plain}) == "claim,params,expected,observed,pass\nsimple,{},a,a,true\n");
}
