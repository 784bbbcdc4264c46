#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "towerlab/exact/error.hpp"
#include "towerlab/scenario/report.hpp"

namespace towerlab::scenario {

class ScenarioError : public Error {
public:
    using Error::Error;
};

class UnknownScenario : public ScenarioError {
public:
    explicit UnknownScenario(const std::string& name) : ScenarioError("unknown scenario '" + name + "'") {}
};

class PolicyMismatch : public ScenarioError {
public:
    using ScenarioError::ScenarioError;
};

class InvalidN : public ScenarioError {
public:
    using ScenarioError::ScenarioError;
};

class ParseError : public ScenarioError {
public:
    ParseError(const std::string& origin, size_t line, size_t column, const std::string& what);
    size_t line() const { return line_; }
    size_t column() const { return column_; }

private:
    size_t line_, column_;
};

// A well-formed document whose content cannot be built; names the offending object.
class SemanticError : public ScenarioError {
public:
    SemanticError(std::string object, const std::string& what);
    const std::string& object() const { return object_; }

private:
    std::string object_;
};

enum class NPolicy { Any, Symbolic, Fixed };
std::string to_string(NPolicy p);

// n = nullopt means symbolic.
struct NChoice {
    std::optional<long> value;
    std::string str() const { return value ? std::to_string(*value) : "symbolic"; }
};

struct Scenario {
    std::string name;
    std::string description;
    NPolicy policy = NPolicy::Any;
    json document;
};

// Validates the schema (keys, ids, provenance tags). Does not build anything.
Scenario scenario_from_json(const json& doc, const std::string& origin = "<document>");
Scenario parse_scenario_text(const std::string& text, const std::string& origin = "<text>");
// Parses, validates, and builds every named object once to surface semantic errors.
Scenario load_scenario_file(const std::string& path);

VerificationReport run(const Scenario& s, NChoice n);

// Built objects named in the display section, for table and cone rendering.
struct TableView {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    json cells;                   // encoded rows
    std::vector<std::string> kernel;  // kernel generators in the source basis, when declared
};
std::optional<TableView> table_view(const Scenario& s, NChoice n);

struct ConeView {
    std::string space;
    std::vector<std::string> generators;
    json vectors;
    std::optional<std::string> certificate;  // rendered functional for a declared face
};
std::optional<ConeView> cone_view(const Scenario& s, NChoice n);

}  // namespace towerlab::scenario
