#include <sstream>
#include <vector>

#include "thv/algebra.hpp"
#include "thv/errors.hpp"
#include "thv/expr_parser.hpp"

namespace thv {

std::string Generator::str() const {
  switch (kind) {
    case GenKind::L: return "L[" + index.str() + "]";
    case GenKind::I: return "I[" + index.str() + "]";
    case GenKind::C1: return "c1";
    case GenKind::C2: return "c2";
    case GenKind::C3: return "c3";
    case GenKind::K1: return "k1";
    case GenKind::K3: return "k3";
  }
  return "?";
}

Generator Generator::parse(std::string_view text) {
  if (text == "c1") return central(GenKind::C1);
  if (text == "c2") return central(GenKind::C2);
  if (text == "c3") return central(GenKind::C3);
  if (text == "k1") return central(GenKind::K1);
  if (text == "k3") return central(GenKind::K3);
  if (text.size() >= 4 && (text[0] == 'L' || text[0] == 'I') && text[1] == '[' && text.back() == ']') {
    const Rational idx = Rational::parse(text.substr(2, text.size() - 3));
    return text[0] == 'L' ? L(idx) : I(idx);
  }
  throw ParseError("not a generator: '" + std::string(text) + "'");
}

std::ostream& operator<<(std::ostream& os, const Generator& g) { return os << g.str(); }

AlgebraDescriptor::AlgebraDescriptor(int t) : t_(t) {
  if (t < 1) throw std::invalid_argument("twist t must be >= 1, got " + std::to_string(t));
}

bool is_valid(const Generator& g, const AlgebraDescriptor& alg) {
  switch (g.kind) {
    case GenKind::L: return g.index.is_integer();
    case GenKind::I: {
      if (!alg.twisted()) return g.index.is_integer();
      // t * index - 1 must be a multiple of t.
      const Rational scaled = g.index * Rational(alg.t()) - Rational(1);
      if (!scaled.is_integer()) return false;
      const mpz_class n = scaled.numerator();
      return mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(alg.t())) != 0;
    }
    case GenKind::C1:
    case GenKind::C2:
    case GenKind::C3: return !alg.twisted() && g.index.is_zero();
    case GenKind::K1:
    case GenKind::K3: return alg.twisted() && g.index.is_zero();
  }
  return false;
}

void validate(const Generator& g, const AlgebraDescriptor& alg) {
  if (!is_valid(g, alg))
    throw MalformedGenerator("generator " + g.str() + " is not valid for t = " + std::to_string(alg.t()));
}

Rational degree(const Generator& g) { return g.is_central() ? Rational(0) : -g.index; }

AlgebraElement::AlgebraElement(const Generator& g, ParamPoly coeff) { add(g, coeff); }

AlgebraElement AlgebraElement::parse(std::string_view text) {
  AlgebraElement out;
  for (auto& t : text::parse_linear(text)) {
    if (t.ket) throw ParseError("algebra element may not contain '|0>': '" + std::string(text) + "'");
    if (t.word.empty()) {
      if (t.coeff.is_zero()) continue;
      throw ParseError("scalar term without a generator in '" + std::string(text) + "'");
    }
    if (t.word.size() != 1)
      throw ParseError("products of generators are not algebra elements: '" + std::string(text) + "'");
    out.add(Generator::parse(t.word.front()), t.coeff);
  }
  return out;
}

ParamPoly AlgebraElement::coefficient(const Generator& g) const {
  const auto it = terms_.find(g);
  return it == terms_.end() ? ParamPoly() : it->second;
}

void AlgebraElement::add(const Generator& g, const ParamPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(g, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [g, c] : o.terms_) add(g, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [g, c] : o.terms_) add(g, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const ParamPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, v] : terms_) v *= c;
  return *this;
}

std::string scaled_symbol(const ParamPoly& coeff, const std::string& symbol, bool star) {
  const std::string sep = star ? "*" : "";
  if (coeff == ParamPoly(1)) return symbol;
  if (coeff == ParamPoly(-1)) return "-" + symbol;
  if (coeff.terms().size() == 1) return coeff.str() + sep + symbol;
  return "(" + coeff.str() + ")" + sep + symbol;
}

std::string join_signed(const std::vector<std::string>& pieces) {
  if (pieces.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& p = pieces[i];
    if (i == 0)
      out += p;
    else if (p.front() == '-')
      out += " - " + p.substr(1);
    else
      out += " + " + p;
  }
  return out;
}

std::string AlgebraElement::str() const {
  std::vector<std::string> pieces;
  for (const auto& [g, c] : terms_) pieces.push_back(scaled_symbol(c, g.str()));
  return join_signed(pieces);
}

std::ostream& operator<<(std::ostream& os, const AlgebraElement& x) { return os << x.str(); }

}  // namespace thv
