#pragma once

#include <json.hpp>

#include "thv/modules.hpp"

namespace thv::io {

using nlohmann::json;

/// {"I": [k1, ..., ks], "L": [m1, ..., mr]}
json to_json(const PBWMonomial& m);
PBWMonomial monomial_from_json(const json& j);

/// [{"mono": {...}, "coeff": "<ParamPoly text>"}, ...] in canonical monomial order.
json to_json(const ModuleVector& v);
/// Validates every monomial against the module.
ModuleVector vector_from_json(const Module& module, const json& j);

/// {"t": 2, "kind": "twisted_verma", "params": {"k1": "l1", "k3": "1", "h": "h"}}
json to_json(const ModuleDescriptor& d);
/// Throws ParseError naming the offending field.
ModuleDescriptor descriptor_from_json(const json& j);

}  // namespace thv::io
