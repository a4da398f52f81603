#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "thv/param_poly.hpp"

namespace thv::text {

/// One summand of a parsed linear combination: a scalar coefficient, an
/// ordered word of generator symbols, and whether it ends in the cyclic
/// vector "|0>".
struct ParsedTerm {
  ParamPoly coeff;
  std::vector<std::string> word;
  bool ket = false;
};

/// Parses sums of products of numbers, parameter symbols (l1 l2 l3 h a),
/// generator symbols (L[n], I[r], c1 c2 c3 k1 k3), and "|0>".
/// Generators may be juxtaposed; parentheses may only enclose scalars.
/// Throws ParseError naming the offending position.
std::vector<ParsedTerm> parse_linear(std::string_view text);

}  // namespace thv::text
