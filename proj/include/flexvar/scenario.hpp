#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flexvar/catalog.hpp"
#include "flexvar/discrete_flex.hpp"
#include "flexvar/variation.hpp"

#include <nlohmann/json.hpp>

namespace flexvar {

// One fully-specified run. A scenario either parses and validates as a
// whole or is rejected with a field-level error; nothing runs partially.
struct Scenario {
    std::string surface = "plane";
    std::string domain;  // empty = the surface's own domain
    std::string flex;
    int nodes = 64;
    int boundary_nodes = 64;
    double fd_step = 1e-3;
    bool richardson = true;
    int samples = 16;  // residual-scan grid (per axis)
    std::vector<double> t_list;
    std::string format = "text";
    bool erratum_probe = false;
    std::string out;
    std::string grid = "12x12";  // construct grid NUxNV
};

// Unset fields inherit the scenario (file) value, then the defaults.
struct ScenarioOverrides {
    std::optional<std::string> surface, domain, flex, format, out, grid, t_list;
    std::optional<int> nodes, boundary_nodes, samples;
    std::optional<double> fd_step;
    std::optional<bool> richardson, erratum_probe;
};

// Flat "key = value" text (one key per line, '#' comments) or a JSON
// object with the same keys; the two are interchangeable.
Scenario parse_scenario_file(const std::string& path);
Scenario parse_scenario_text(const std::string& text);
void apply_overrides(Scenario& s, const ScenarioOverrides& o);

nlohmann::json scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const nlohmann::json& j);
std::string scenario_to_text(const Scenario& s);

std::vector<double> parse_t_list(const std::string& csv);

struct ResolvedScenario {
    MongePatch patch;
    std::optional<FlexField> flex;          // absent for construct requests
    std::optional<std::pair<int, int>> construct_grid;
    VariationSpec variation;
    int samples = 16;
    std::vector<double> t_list;
};

// Builds the patch and flex; throws ValidationError naming the bad field.
ResolvedScenario resolve(const Scenario& s);

}  // namespace flexvar
