#include "towerlab/scenario/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "towerlab/exact/param_poly.hpp"

namespace towerlab::scenario {

namespace {

bool is_poly_map(const json& v) {
    if (!v.is_object()) return false;
    for (auto& [k, c] : v.items()) {
        if (k.empty() || !std::all_of(k.begin(), k.end(), ::isdigit) || !c.is_string()) return false;
    }
    return true;
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("report lacks '") + key + "'");
    return j.at(key);
}

std::string string_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_string()) throw std::invalid_argument(std::string("report field '") + key + "' is not a string");
    return v.get<std::string>();
}

}  // namespace

bool VerificationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

size_t VerificationReport::passed() const {
    return std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

json to_json(const VerificationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name},
                          {"expected", c.expected},
                          {"computed", c.computed},
                          {"status", c.pass ? "PASS" : "FAIL"},
                          {"provenance", c.provenance},
                          {"anchor", c.anchor}});
    }
    return {{"scenario", r.scenario}, {"n", r.n}, {"checks", checks}};
}

VerificationReport report_from_json(const json& j) {
    VerificationReport r;
    r.scenario = string_field(j, "scenario");
    r.n = string_field(j, "n");
    const json& checks = field(j, "checks");
    if (!checks.is_array()) throw std::invalid_argument("report 'checks' is not a list");
    for (const auto& c : checks) {
        CheckResult x;
        x.name = string_field(c, "name");
        x.expected = field(c, "expected");
        x.computed = field(c, "computed");
        std::string status = string_field(c, "status");
        if (status != "PASS" && status != "FAIL") throw std::invalid_argument("unknown status '" + status + "'");
        x.pass = status == "PASS";
        x.provenance = string_field(c, "provenance");
        x.anchor = c.contains("anchor") ? string_field(c, "anchor") : "";
        r.checks.push_back(std::move(x));
    }
    return r;
}

std::string render_value(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (is_poly_map(v)) {
        std::map<int, Rat> c;
        for (auto& [k, x] : v.items()) c[std::stoi(k)] = Rat::parse(x.get<std::string>());
        return ParamPoly(c).str();
    }
    if (v.is_array()) {
        std::string s = "(";
        for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + render_value(v[i]);
        return s + ")";
    }
    if (v.is_object()) {
        std::string s = "{";
        bool first = true;
        for (auto& [k, x] : v.items()) {
            s += (first ? "" : ", ") + k + ": " + render_value(x);
            first = false;
        }
        return s + "}";
    }
    return v.dump();
}

std::string render_text(const VerificationReport& r) {
    std::ostringstream os;
    os << "scenario " << r.scenario << " (n = " << r.n << ")\n";
    size_t width = 0;
    for (const auto& c : r.checks) width = std::max(width, c.name.size());
    for (const auto& c : r.checks) {
        os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name << std::string(width - c.name.size() + 2, ' ')
           << render_value(c.computed);
        if (!c.pass) os << "  (expected " << render_value(c.expected) << ")";
        os << "  [" << c.provenance << "]\n";
    }
    os << r.passed() << "/" << r.checks.size() << " checks passed\n";
    return os.str();
}

}  // namespace towerlab::scenario
