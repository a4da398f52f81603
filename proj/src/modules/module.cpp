#include <algorithm>
#include <functional>

#include "thv/errors.hpp"
#include "thv/expr_parser.hpp"
#include "thv/modules.hpp"

namespace thv {

namespace {

// Nonincreasing sequences of integers k >= min_part, k <= max_part, whose
// weights sum to `target`.
void partitions(long target, int min_part, int max_part, const std::function<long(int)>& weight,
                std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (target == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = max_part; k >= min_part; --k) {
    const long w = weight(k);
    if (w > target) continue;
    cur.push_back(k);
    partitions(target - w, min_part, k, weight, cur, out);
    cur.pop_back();
  }
}

}  // namespace

ModuleVector Module::zero() const { return ModuleVector(desc_); }

ModuleVector Module::cyclic() const { return vector(PBWMonomial{}); }

ModuleVector Module::vector(const PBWMonomial& m, const ParamPoly& c) const {
  validate(m);
  ModuleVector v(desc_);
  v.add(m, c);
  return v;
}

void Module::validate(const PBWMonomial& m) const {
  const int l_min = twisted() ? 1 : 2;
  for (std::size_t j = 0; j < m.i_part.size(); ++j) {
    if (m.i_part[j] < 1 || (j > 0 && m.i_part[j] > m.i_part[j - 1]))
      throw InvariantViolation("I-part must be nonincreasing with parts >= 1");
  }
  for (std::size_t j = 0; j < m.l_part.size(); ++j) {
    if (m.l_part[j] < l_min || (j > 0 && m.l_part[j] > m.l_part[j - 1]))
      throw InvariantViolation("L-part must be nonincreasing with parts >= " + std::to_string(l_min));
  }
}

Rational Module::level(const PBWMonomial& m) const {
  long units = 0;  // in multiples of 1/t
  const long t = this->t();
  for (int k : m.i_part) units += twisted() ? k * t - 1 : k;
  for (int l : m.l_part) units += l * t;
  return Rational(units, t);
}

Rational Module::max_level(const ModuleVector& v) const {
  Rational best = 0;
  for (const auto& [m, c] : v.terms()) best = std::max(best, level(m));
  return best;
}

std::vector<Generator> Module::factors(const PBWMonomial& m) const {
  std::vector<Generator> out;
  const Rational off = algebra().i_offset();
  for (int k : m.i_part) out.push_back(Generator::I(Rational(-k) + off));
  for (int l : m.l_part) out.push_back(Generator::L(Rational(-l)));
  return out;
}

std::string Module::word_str(const PBWMonomial& m) const {
  std::string out;
  for (const auto& g : factors(m)) out += g.str();
  return out + "|0>";
}

std::vector<PBWMonomial> Module::basis_at_level(const Rational& level) const {
  if (level.sign() < 0) return {};
  const Rational scaled = level * Rational(t());
  if (!scaled.is_integer()) return {};
  const long n_units = *scaled.to_long();
  const long t = this->t();
  const int l_min = twisted() ? 1 : 2;
  const auto i_weight = [&](int k) -> long { return twisted() ? k * t - 1 : k; };
  const auto l_weight = [&](int m) -> long { return m * t; };

  std::vector<PBWMonomial> out;
  std::vector<int> cur;
  for (long i_units = 0; i_units <= n_units; ++i_units) {
    const long l_units = n_units - i_units;
    std::vector<std::vector<int>> is, ls;
    partitions(i_units, 1, static_cast<int>(i_units + 1), i_weight, cur, is);
    partitions(l_units, l_min, static_cast<int>(l_units / t + 1), l_weight, cur, ls);
    for (const auto& ip : is)
      for (const auto& lp : ls) out.push_back(PBWMonomial{ip, lp});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Module::graded_dimension(const Rational& level) const { return basis_at_level(level).size(); }

std::vector<Rational> Module::levels_up_to(const Rational& max_level) const {
  std::vector<Rational> out;
  const Rational step(1, t());
  for (Rational l = 0; l <= max_level; l += step) out.push_back(l);
  return out;
}

ParamPoly Module::central_value(GenKind k) const {
  switch (k) {
    case GenKind::C1: return desc_->param("l1");
    case GenKind::C2: return desc_->param("l2");
    case GenKind::C3: return desc_->param("l3");
    case GenKind::K1: return desc_->param("k1");
    case GenKind::K3: return desc_->param("k3");
    default: throw MalformedGenerator("not a central generator");
  }
}

ModuleVector Module::parse_vector(std::string_view text) const {
  ModuleVector out = zero();
  for (auto& t : text::parse_linear(text)) {
    if (!t.ket) {
      if (t.word.empty() && t.coeff.is_zero()) continue;
      throw ParseError("module vector terms must end in '|0>': '" + std::string(text) + "'");
    }
    std::vector<Generator> word;
    for (const auto& s : t.word) {
      word.push_back(Generator::parse(s));
      thv::validate(word.back(), algebra());
    }
    out += t.coeff * act_word(word, cyclic());
  }
  return out;
}

}  // namespace thv
