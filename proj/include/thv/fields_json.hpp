#pragma once

#include "thv/fields.hpp"
#include "thv/json_io.hpp"

namespace thv::io {

/// {"window": {...}, "interior": {...}, "truncated": bool, "terms": [{"x1": "e1", "x2": "e2", "coeff": "c"}]}
json to_json(const Laurent2& f);
json to_json(const CommutatorReport& r);
json to_json(const DeltaReport& r);

}  // namespace thv::io
