#include "stringc/report.hpp"

namespace stringc {

nlohmann::ordered_json certificate_to_json(const Certificate& c,
                                           const nlohmann::ordered_json& params) {
    nlohmann::ordered_json j;
    j["order"] = c.order;
    j["schlafli"] = c.schlafli;
    j["is_sggi"] = c.is_sggi;
    j["string_ok"] = c.string_ok;
    j["intersection_ok"] = c.intersection_ok;
    j["degenerate"] = c.degenerate;
    j["solvable"] = c.solvable;
    j["derived_length"] = c.derived_length;
    if (!params.is_null() && !params.empty())
        j["params"] = params;
    j["elapsed_ms"] = c.elapsed_ms;
    return j;
}

std::string to_jsonl(const std::vector<ClaimReport>& reports) {
    std::string out;
    for (const ClaimReport& r : reports) {
        nlohmann::ordered_json j;
        j["claim"] = r.claim;
        j["params"] = r.params.is_null() ? nlohmann::ordered_json::object() : r.params;
        j["expected"] = r.expected;
        j["observed"] = r.observed;
        j["pass"] = r.pass;
        j["elapsed_ms"] = r.elapsed_ms;
        out += j.dump();
        out += '\n';
    }
    return out;
}

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string to_csv(const std::vector<ClaimReport>& reports) {
    std::string out = "claim,params,expected,observed,pass\n";
    for (const ClaimReport& r : reports) {
        std::string params =
            r.params.is_null() ? "{}" : r.params.dump();
        out += csv_quote(r.claim) + ',' + csv_quote(params) + ',' + csv_quote(r.expected) +
               ',' + csv_quote(r.observed) + ',' + (r.pass ? "true" : "false") + '\n';
    }
    return out;
}

} // namespace stringc
