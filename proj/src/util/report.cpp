#include "occ/util/report.hpp"

namespace occ {

bool Report::ok() const { return first_failure() == nullptr; }

const ClaimResult* Report::first_failure() const {
    for (const auto& c : claims)
        if (!c.passed) return &c;
    return nullptr;
}

ClaimResult& Report::add(std::string id, bool passed, std::string detail) {
    claims.push_back(ClaimResult{std::move(id), passed, std::move(detail), {}, {}, {}});
    return claims.back();
}

nlohmann::json to_json(const ClaimResult& claim) {
    nlohmann::json j{{"id", claim.id}, {"status", claim.passed ? "pass" : "fail"}};
    if (!claim.detail.empty()) j["detail"] = claim.detail;
    if (!claim.witnesses.empty()) j["witnesses"] = claim.witnesses;
    if (!claim.values.empty()) j["values"] = claim.values;
    if (!claim.certificates.empty()) j["certificates"] = claim.certificates;
    return j;
}

nlohmann::json to_json(const Report& report) {
    nlohmann::json claims = nlohmann::json::array();
    for (const auto& c : report.claims) claims.push_back(to_json(c));
    return {{"suite", report.suite}, {"status", report.ok() ? "pass" : "fail"}, {"claims", claims}};
}

}  // namespace occ
