#pragma once

#include <string>

#include <json.hpp>

#include "patlab/enumeration.hpp"
#include "patlab/structure_maps.hpp"
#include "patlab/verification.hpp"

namespace patlab {

// JSON reports. Field names are fixed; every report that can fail carries
// "verdict" and "witnesses", count-bearing reports carry "counts".

nlohmann::ordered_json to_json(const CountSequence& seq);
nlohmann::ordered_json to_json(const MapResult& result);
nlohmann::ordered_json to_json(const WilfReport& report);
nlohmann::ordered_json to_json(const BijectionReport& report);
nlohmann::ordered_json to_json(const BasisResult& result);
nlohmann::ordered_json to_json(const GrowthDiagnostics& diagnostics);
nlohmann::ordered_json to_json(const SandwichReport& report);
nlohmann::ordered_json to_json(const SurveyReport& report);

/// Header "n,count", one row per n.
std::string to_csv(const CountSequence& seq);
std::string to_csv(const WilfReport& report);
std::string to_csv(const SandwichReport& report);
std::string to_csv(const GrowthDiagnostics& diagnostics);

std::string to_table(const CountSequence& seq);
std::string to_table(const WilfReport& report);
std::string to_table(const BijectionReport& report);
std::string to_table(const BasisResult& result);
std::string to_table(const GrowthDiagnostics& diagnostics);
std::string to_table(const SandwichReport& report);
std::string to_table(const SurveyReport& report);

}  // namespace patlab
