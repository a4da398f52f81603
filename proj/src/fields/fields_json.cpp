#include "thv/fields_json.hpp"

namespace thv::io {

namespace {

json window_json(const Window& w, int t) {
  return json{{"x1", {Rational(w.x1_min, t).str(), Rational(w.x1_max, t).str()}},
              {"x2", {Rational(w.x2_min, t).str(), Rational(w.x2_max, t).str()}}};
}

}  // namespace

json to_json(const Laurent2& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.coeffs())
    terms.push_back(json{{"x1", Rational(e.first, f.t()).str()}, {"x2", Rational(e.second, f.t()).str()},
                         {"coeff", c.str()}});
  return json{{"t", f.t()},
              {"window", window_json(f.window(), f.t())},
              {"interior", window_json(f.interior(), f.t())},
              {"truncated", f.truncated()},
              {"terms", terms}};
}

json to_json(const CommutatorReport& r) {
  return json{{"a", std::string(field_name(r.a))},
              {"b", std::string(field_name(r.b))},
              {"m", r.m.str()},
              {"n", r.n.str()},
              {"v", to_json(r.v)},
              {"lhs", to_json(r.lhs)},
              {"rhs", to_json(r.rhs)},
              {"rhs_formula", r.rhs_formula ? to_json(*r.rhs_formula) : json(nullptr)},
              {"equal", r.equal},
              {"formula_equal", r.formula_equal}};
}

json to_json(const DeltaReport& r) {
  return json{{"m", r.m}, {"n", r.n}, {"holds_in_window", r.holds_in_window}, {"residual", to_json(r.residual)}};
}

}  // namespace thv::io
