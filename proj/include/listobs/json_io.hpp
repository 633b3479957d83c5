#pragma once

#include <string>

#include <json.hpp>

#include "listobs/dichotomy.hpp"
#include "listobs/families.hpp"
#include "listobs/list_coloring.hpp"
#include "listobs/obstruction.hpp"
#include "listobs/propagation.hpp"

namespace listobs {

using nlohmann::json;

// {"n": int, "lists": [[colors]...]} with colors drawn from {1, 2, 3}.
json list_system_to_json(const ListSystem& l);
// Throws ParseError on schema violations (offset 0: not positional).
ListSystem list_system_from_json(const json& j);
ListSystem read_list_system_file(const std::string& path);

json coloring_to_json(const std::optional<Coloring>& c);
json report_to_json(const ObstructionReport& r);
json family_report_to_json(const FamilyReport& r);
json verdict_to_json(const DichotomyVerdict& v, const std::string& pattern_name);
json enumeration_to_json(const EnumerationResult& r, const std::vector<std::string>& forbidden);

}  // namespace listobs
