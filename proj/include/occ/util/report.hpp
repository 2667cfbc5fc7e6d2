#pragma once

#include "occ/exact/rational.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace occ {

/// Outcome of one checked statement.
struct ClaimResult {
    std::string id;
    bool passed = false;
    std::string detail;
    std::vector<std::string> witnesses;
    /// Exact values rendered as "num/den".
    std::map<std::string, std::string> values;
    std::vector<nlohmann::json> certificates;

    ClaimResult& value(const std::string& key, const exact::Rational& v) {
        values[key] = v.fraction_str();
        return *this;
    }
};

struct Report {
    std::string suite;
    std::vector<ClaimResult> claims;

    [[nodiscard]] bool ok() const;
    /// First failing claim, or nullptr.
    [[nodiscard]] const ClaimResult* first_failure() const;
    ClaimResult& add(std::string id, bool passed, std::string detail = {});
};

nlohmann::json to_json(const ClaimResult& claim);
nlohmann::json to_json(const Report& report);

}  // namespace occ
