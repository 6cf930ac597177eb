#pragma once

#include <map>
#include <string>

#include "mhcy/scenario.hpp"

namespace mhcy {

// A parsed scenario plus optional pinned expectations from the [expect]
// section, keyed by zero-fiber K-generator name.
struct ScenarioDocument {
    SNCScenario scenario;
    std::map<std::string, LaurentPoly> expect_lhs, expect_rhs;
};

// Throws scenario_error with a distinct category (io, schema, crossref,
// invariant) naming the first offending field.
ScenarioDocument parse_scenario(const std::string& path);
ScenarioDocument parse_scenario_text(const std::string& text, const std::string& display_name);

// Normalized textual form; parse(serialize(parse(f))) == parse(f).
std::string serialize_scenario(const ScenarioDocument& doc);

// term syntax: [int*][L[^k]*][GEN], joined with + or -
MotivicClass parse_motivic(const std::string& text,
                           const std::shared_ptr<const MotivicRegistry>& reg);

// term syntax: [rational*][GEN], joined with + or -
KClass parse_kclass(const std::string& text, const std::shared_ptr<const KPresentation>& pres);

}  // namespace mhcy
