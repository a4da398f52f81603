#include "thv/param_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "thv/errors.hpp"
#include "thv/expr_parser.hpp"

namespace thv {

namespace {

constexpr std::array<std::string_view, kParamCount> kNames{"l1", "l2", "l3", "h", "a"};

unsigned total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

// Merges two canonically ordered term lists.
std::vector<ParamPoly::Term> merge_add(const std::vector<ParamPoly::Term>& a,
                                       const std::vector<ParamPoly::Term>& b, bool subtract) {
  std::vector<ParamPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && graded_lex_before(a[i].first, b[j].first))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || graded_lex_before(b[j].first, a[i].first)) {
      out.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
      ++j;
    } else {
      Rational c = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
      if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::string_view param_name(Param p) { return kNames[static_cast<std::size_t>(p)]; }

std::optional<Param> param_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kParamCount; ++i)
    if (kNames[i] == name) return static_cast<Param>(i);
  return std::nullopt;
}

bool graded_lex_before(const Exponents& a, const Exponents& b) {
  const unsigned ta = total(a), tb = total(b);
  if (ta != tb) return ta > tb;
  return a > b;
}

ParamPoly::ParamPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace_back(Exponents{}, c);
}

ParamPoly ParamPoly::var(Param p, unsigned power) {
  Exponents e{};
  e[static_cast<std::size_t>(p)] = static_cast<std::uint16_t>(power);
  return monomial(e, Rational(1));
}

ParamPoly ParamPoly::monomial(const Exponents& e, const Rational& c) {
  ParamPoly out;
  if (!c.is_zero()) out.terms_.emplace_back(e, c);
  return out;
}

ParamPoly ParamPoly::parse(std::string_view text) {
  ParamPoly out;
  for (auto& t : text::parse_linear(text)) {
    if (!t.word.empty() || t.ket) throw ParseError("not a scalar polynomial: '" + std::string(text) + "'");
    out += t.coeff;
  }
  return out;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total(terms_[0].first) == 0);
}

std::optional<Rational> ParamPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && total(terms_[0].first) == 0) return terms_[0].second;
  return std::nullopt;
}

unsigned ParamPoly::degree_in(Param p) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[static_cast<std::size_t>(p)]);
  return d;
}

unsigned ParamPoly::total_degree() const { return terms_.empty() ? 0 : total(terms_.front().first); }

ParamPoly ParamPoly::operator-() const {
  ParamPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge_add(terms_, o.terms_, false);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_add(terms_, o.terms_, true);
  return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else if (!c.is_one()) {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (auto c = b.constant_value()) return a * *c;
  if (auto c = a.constant_value()) return b * *c;
  std::map<Exponents, Rational> acc;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (std::size_t k = 0; k < kParamCount; ++k) e[k] = static_cast<std::uint16_t>(ea[k] + eb[k]);
      acc[e] += ca * cb;
    }
  }
  ParamPoly out;
  for (auto& [e, c] : acc)
    if (!c.is_zero()) out.terms_.emplace_back(e, c);
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const ParamPoly::Term& x, const ParamPoly::Term& y) { return graded_lex_before(x.first, y.first); });
  return out;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) { return *this = *this * o; }

ParamPoly ParamPoly::pow(unsigned e) const {
  ParamPoly out(1);
  for (unsigned i = 0; i < e; ++i) out *= *this;
  return out;
}

Rational ParamPoly::eval(const Assignment& assignment) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t k = 0; k < kParamCount; ++k) {
      if (e[k] == 0) continue;
      const auto it = assignment.find(static_cast<Param>(k));
      if (it == assignment.end())
        throw UnboundParameter("parameter '" + std::string(kNames[k]) + "' is not bound");
      term *= it->second.pow(e[k]);
    }
    sum += term;
  }
  return sum;
}

ParamPoly ParamPoly::substitute(const std::map<Param, ParamPoly>& values) const {
  ParamPoly out;
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    ParamPoly factor(c);
    for (const auto& [p, v] : values) {
      auto& k = rest[static_cast<std::size_t>(p)];
      if (k == 0) continue;
      factor *= v.pow(k);
      k = 0;
    }
    out += factor * monomial(rest, Rational(1));
  }
  return out;
}

std::vector<ParamPoly> ParamPoly::coefficients_in(Param p) const {
  std::vector<ParamPoly> out(degree_in(p) + 1);
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    const auto k = rest[static_cast<std::size_t>(p)];
    rest[static_cast<std::size_t>(p)] = 0;
    out[k] += monomial(rest, c);
  }
  return out;
}

ParamPoly ParamPoly::monic() const {
  if (terms_.empty()) return {};
  return *this * (Rational(1) / terms_.front().second);
}

std::string ParamPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t k = 0; k < kParamCount; ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += kNames[k];
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    const Rational mag = c.abs();
    std::string body;
    if (mono.empty())
      body = mag.str();
    else if (mag.is_one())
      body = mono;
    else
      body = mag.str() + "*" + mono;
    if (first)
      os << (c.sign() < 0 ? "-" : "") << body;
    else
      os << (c.sign() < 0 ? " - " : " + ") << body;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.str(); }

}  // namespace thv
