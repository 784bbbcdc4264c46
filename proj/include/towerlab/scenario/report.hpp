#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace towerlab::scenario {

using json = nlohmann::json;

struct CheckResult {
    std::string name;
    json expected;
    json computed;
    bool pass = false;
    std::string provenance;
    std::string anchor;

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerificationReport {
    std::string scenario;
    std::string n;  // "symbolic" or a decimal integer
    std::vector<CheckResult> checks;

    bool all_pass() const;
    size_t passed() const;
    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

json to_json(const VerificationReport& r);
// Throws std::invalid_argument on anything that is not a report.
VerificationReport report_from_json(const json& j);

std::string render_text(const VerificationReport& r);
// Poly coefficient maps as "1 - 2n", everything else as compact JSON.
std::string render_value(const json& v);

}  // namespace towerlab::scenario
