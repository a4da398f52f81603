#include "thv/json_io.hpp"

#include "thv/errors.hpp"

namespace thv::io {

json to_json(const PBWMonomial& m) { return json{{"I", m.i_part}, {"L", m.l_part}}; }

PBWMonomial monomial_from_json(const json& j) {
  try {
    PBWMonomial m;
    if (j.contains("I")) m.i_part = j.at("I").get<std::vector<int>>();
    if (j.contains("L")) m.l_part = j.at("L").get<std::vector<int>>();
    return m;
  } catch (const json::exception& e) {
    throw ParseError(std::string("mono: ") + e.what());
  }
}

json to_json(const ModuleVector& v) {
  json out = json::array();
  for (const auto& [m, c] : v.terms()) out.push_back(json{{"mono", to_json(m)}, {"coeff", c.str()}});
  return out;
}

ModuleVector vector_from_json(const Module& module, const json& j) {
  if (!j.is_array()) throw ParseError("vector: expected a JSON array");
  ModuleVector out = module.zero();
  for (const auto& term : j) {
    if (!term.contains("mono") || !term.contains("coeff")) throw ParseError("vector: terms need 'mono' and 'coeff'");
    const PBWMonomial m = monomial_from_json(term.at("mono"));
    module.validate(m);
    out.add(m, ParamPoly::parse(term.at("coeff").get<std::string>()));
  }
  return out;
}

json to_json(const ModuleDescriptor& d) {
  json params = json::object();
  for (const auto& [k, v] : d.params) params[k] = v.str();
  return json{{"t", d.alg.t()},
              {"kind", d.kind == ModuleKind::Vacuum ? "vacuum" : "twisted_verma"},
              {"params", params}};
}

ModuleDescriptor descriptor_from_json(const json& j) {
  if (!j.contains("t") || !j.at("t").is_number_integer()) throw ParseError("descriptor: field 't' must be an integer");
  if (!j.contains("kind") || !j.at("kind").is_string()) throw ParseError("descriptor: field 'kind' must be a string");
  const int t = j.at("t").get<int>();
  const std::string kind = j.at("kind").get<std::string>();
  ModuleDescriptor d;
  if (kind == "vacuum") {
    d = ModuleDescriptor::vacuum();
  } else if (kind == "twisted_verma") {
    if (t < 2) throw ParseError("descriptor: field 't' must be >= 2 for twisted_verma");
    d = ModuleDescriptor::twisted_verma(t);
  } else {
    throw ParseError("descriptor: field 'kind' must be 'vacuum' or 'twisted_verma'");
  }
  if (kind == "vacuum" && t != 1) throw ParseError("descriptor: field 't' must be 1 for vacuum");
  if (j.contains("params")) {
    for (const auto& [k, v] : j.at("params").items()) {
      if (!d.params.count(k)) throw ParseError("descriptor: unknown parameter 'params." + k + "'");
      if (!v.is_string()) throw ParseError("descriptor: field 'params." + k + "' must be a string");
      try {
        d.params[k] = ParamPoly::parse(v.get<std::string>());
      } catch (const ParseError& e) {
        throw ParseError("descriptor: field 'params." + k + "': " + e.what());
      }
    }
  }
  return d;
}

}  // namespace thv::io
