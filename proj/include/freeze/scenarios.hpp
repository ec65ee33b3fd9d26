#pragma once

#include <string>
#include <vector>

#include "freeze/solver.hpp"

namespace freeze {

struct ScenarioResult {
    std::string name;
    bool passed = false;
    bool undecided = false;  // a resource cap prevented a verdict
    std::string report;      // deterministic; no timing data
};

// Names of the built-in scenarios, sorted.
std::vector<std::string> scenario_names();

// Runs one scenario; throws std::invalid_argument for unknown names.
ScenarioResult run_scenario(const std::string& name, const SearchLimits& limits = {});

}  // namespace freeze
