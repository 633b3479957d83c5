#include "listobs/json_io.hpp"

#include <fstream>

#include "listobs/errors.hpp"

namespace listobs {

json list_system_to_json(const ListSystem& l) {
  json lists = json::array();
  for (ColorSet s : l.lists()) lists.push_back(s.colors());
  return {{"n", l.size()}, {"lists", std::move(lists)}};
}

ListSystem list_system_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("lists")) {
    throw ParseError("list system JSON needs fields \"n\" and \"lists\"", 0);
  }
  if (!j["n"].is_number_integer()) throw ParseError("\"n\" must be an integer", 0);
  const auto n = j["n"].get<long>();
  const auto& lists = j["lists"];
  if (!lists.is_array() || static_cast<long>(lists.size()) != n) {
    throw ParseError("\"lists\" must be an array of n lists", 0);
  }
  std::vector<ColorSet> out;
  for (const auto& entry : lists) {
    if (!entry.is_array()) throw ParseError("each list must be an array of colors", 0);
    ColorSet s;
    for (const auto& c : entry) {
      if (!c.is_number_integer() || c.get<int>() < 1 || c.get<int>() > 3) {
        throw ParseError("colors must be integers in {1, 2, 3}", 0);
      }
      s.insert(c.get<int>());
    }
    out.push_back(s);
  }
  return ListSystem(std::move(out));
}

ListSystem read_list_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open list file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what(), e.byte);
  }
  return list_system_from_json(j);
}

json coloring_to_json(const std::optional<Coloring>& c) { return c ? json(*c) : json(nullptr); }

json report_to_json(const ObstructionReport& r) {
  json out{{"colorable", r.colorable},
           {"coloring", coloring_to_json(r.coloring)},
           {"minimal", r.minimal},
           {"non_critical", r.non_critical.to_vector()}};
  if (r.extracted) {
    out["extracted"] = {{"vertices", r.extracted->vertices.to_vector()},
                        {"lists", list_system_to_json(r.extracted->lists)}};
  } else {
    out["extracted"] = nullptr;
  }
  return out;
}

json family_report_to_json(const FamilyReport& r) {
  json props = json::array();
  for (const auto& p : r.properties) {
    props.push_back({{"name", p.name}, {"passed", p.passed}, {"detail", p.detail}, {"witness", p.witness}});
  }
  return {{"family", r.family}, {"r", r.r}, {"passed", r.passed()}, {"properties", std::move(props)}};
}

json verdict_to_json(const DichotomyVerdict& v, const std::string& pattern_name) {
  return {{"pattern", pattern_name},
          {"case", to_string(v.structure)},
          {"k", v.k < 0 ? json(nullptr) : json(v.k)},
          {"coloring_finite", v.coloring_finite},
          {"list_finite", v.list_finite},
          {"witness_name", v.witness_name},
          {"witness", v.witness},
          {"sentence", v.sentence()}};
}

json enumeration_to_json(const EnumerationResult& r, const std::vector<std::string>& forbidden) {
  json rows = json::array();
  for (std::size_t k = 1; k < r.counts.size(); ++k) rows.push_back({{"vertices", k}, {"count", r.counts[k]}});
  return {{"forbidden", forbidden}, {"counts", std::move(rows)}, {"max_length", r.max_length}, {"total", r.total}};
}

}  // namespace listobs
