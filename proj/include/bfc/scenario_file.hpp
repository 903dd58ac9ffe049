#pragma once

#include <string>

#include "bfc/scenario.hpp"

namespace bfc {

/// Loads a sectioned scenario file. Sections: [graph], [motion], [initial],
/// [control], [run], [output]. Unknown sections or keys are errors; all
/// diagnostics carry the offending line and field (ScenarioParseError).
Scenario load_scenario_file(const std::string& path);

/// Parses scenario text (path used only in diagnostics).
Scenario parse_scenario(const std::string& text, const std::string& name);

/// Returns path if it exists, else path + ".scn" if that exists, else path.
std::string resolve_scenario_path(const std::string& path);

}  // namespace bfc
