#pragma once

#include <string>
#include <vector>

#include "thv/json_io.hpp"
#include "thv/structure.hpp"

namespace thv::io {

json to_json(const AutReport& r);
/// {"level": "1/2", "rows": [mono...], "columns": [mono...], "entries": [["1/2*l3"]]}
json to_json(const GramMatrix& g);
json to_json(const std::vector<CharacterRow>& rows);
json to_json(const ConformalReport& r);

inline constexpr const char* kCharacterCsvHeader = "level,verma_dim,irr_dim,nullity";
/// Header line plus one line per row, each terminated by '\n'.
std::string to_csv(const std::vector<CharacterRow>& rows);

}  // namespace thv::io
