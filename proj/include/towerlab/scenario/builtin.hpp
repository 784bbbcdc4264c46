#pragma once

#include <string>
#include <vector>

#include "towerlab/scenario/document.hpp"

namespace towerlab::scenario {

struct ScenarioInfo {
    std::string name;
    std::string description;
    NPolicy policy;
};

std::vector<ScenarioInfo> list_scenarios();

// Throws UnknownScenario.
Scenario builtin_scenario(const std::string& name);
VerificationReport run_scenario(const std::string& name, NChoice n);

// The scenario document, ready to be written to a file and loaded back.
json export_scenario(const std::string& name);

}  // namespace towerlab::scenario
