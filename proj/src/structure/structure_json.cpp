#include "thv/structure_json.hpp"

namespace thv::io {

json to_json(const AutReport& r) {
  json trace = json::array();
  for (const auto& c : r.trace) trace.push_back(json{{"relation", c.relation}, {"constraint", c.constraint.str()}});
  return json{{"case", std::string(aut_case_name(r.label))},
              {"l2", r.l2.str()},
              {"l3", r.l3.str()},
              {"trace", trace},
              {"gcd", r.solution_gcd.str()}};
}

json to_json(const GramMatrix& g) {
  json rows = json::array(), cols = json::array(), entries = json::array();
  for (const auto& r : g.rows) rows.push_back(to_json(r));
  for (const auto& c : g.columns) cols.push_back(to_json(c));
  for (const auto& row : g.entries) {
    json line = json::array();
    for (const auto& e : row) line.push_back(e.str());
    entries.push_back(line);
  }
  return json{{"level", g.level.str()}, {"rows", rows}, {"columns", cols}, {"entries", entries}};
}

json to_json(const std::vector<CharacterRow>& rows) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back(json{{"level", r.level.str()}, {"verma_dim", r.verma_dim}, {"irr_dim", r.irr_dim},
                       {"nullity", r.nullity}});
  return out;
}

json to_json(const ConformalReport& r) {
  return json{{"l1", r.l1.str()},
              {"l2", r.l2.str()},
              {"l3", r.l3.str()},
              {"central_charge", r.central_charge.str()},
              {"max_level", r.max_level.str()},
              {"max_mode", r.max_mode},
              {"vectors", r.vectors},
              {"commute_checks", r.commute_checks},
              {"commute_failures", r.commute_failures},
              {"virasoro_checks", r.virasoro_checks},
              {"virasoro_failures", r.virasoro_failures},
              {"failures", r.failures},
              {"ok", r.ok()}};
}

std::string to_csv(const std::vector<CharacterRow>& rows) {
  std::string out = std::string(kCharacterCsvHeader) + "\n";
  for (const auto& r : rows)
    out += r.level.str() + "," + std::to_string(r.verma_dim) + "," + std::to_string(r.irr_dim) + "," +
           std::to_string(r.nullity) + "\n";
  return out;
}

}  // namespace thv::io
