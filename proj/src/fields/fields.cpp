#include "thv/fields.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "thv/errors.hpp"

namespace thv {

namespace {

long weight(FieldId f) { return f == FieldId::Omega ? 2 : 1; }

// Vertex index p of the L-convention mode n.
Rational vertex_index(FieldId f, const Rational& n) { return f == FieldId::Omega ? n + Rational(1) : n; }

Rational sign(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

long level_bound(const Module& mod, const ModuleVector& v) {
  return mod.max_level(v).ceil();
}

ModuleVector scaled(const Rational& c, const ModuleVector& v) {
  if (c.is_zero()) return ModuleVector(v.descriptor_ptr());
  return ParamPoly(c) * v;
}

}  // namespace

std::string_view field_name(FieldId f) { return f == FieldId::Omega ? "Omega" : "Igen"; }

FieldId field_from_name(std::string_view name) {
  if (name == "Omega" || name == "omega") return FieldId::Omega;
  if (name == "Igen" || name == "I") return FieldId::Igen;
  throw ParseError("unknown field '" + std::string(name) + "' (expected Omega or Igen)");
}

Generator field_generator(FieldId f, const Rational& n, const AlgebraDescriptor& alg) {
  const Generator g = f == FieldId::Omega ? Generator::L(n) : Generator::I(n);
  if (!is_valid(g, alg)) {
    const std::string lattice = f == FieldId::Omega || !alg.twisted() ? "Z" : "Z + 1/" + std::to_string(alg.t());
    throw LatticeError(std::string(field_name(f)) + " mode " + n.str() + " is not in " + lattice);
  }
  return g;
}

ModuleVector field_mode(const Module& mod, FieldId f, const Rational& n, const ModuleVector& v) {
  return mod.act(field_generator(f, n, mod.algebra()), v);
}

ModuleVector vertex_mode(const Module& mod, FieldId f, const Rational& p, const ModuleVector& v) {
  return field_mode(mod, f, f == FieldId::Omega ? p - Rational(1) : p, v);
}

ModuleVector field_state(const Module& vacuum, FieldId f) {
  if (vacuum.twisted()) throw std::invalid_argument("field states live in a vacuum module");
  return f == FieldId::Omega ? vacuum.vector(PBWMonomial{{}, {2}}) : vacuum.vector(PBWMonomial{{1}, {}});
}

ModuleVector generator_product(const Module& vacuum, FieldId u, long j, FieldId w) {
  return vertex_mode(vacuum, u, Rational(j), field_state(vacuum, w));
}

namespace {

// Mode p of one PBW word state, acting on w.
ModuleVector word_mode(const Module& target, const Module& vacuum, const PBWMonomial& word, const Rational& p,
                       const ModuleVector& w) {
  if (word.empty()) {
    if (!p.is_integer()) throw LatticeError("identity field mode " + p.str() + " is not in Z");
    return p == Rational(-1) ? w : target.zero();
  }
  if (word.length() == 1) {
    // I[-k]|0> = D^{k-1} I / (k-1)!, L[-m]|0> = D^{m-2} omega / (m-2)!,
    // and (D^j v / j!)_(p) = (-1)^j binom(p, j) v_(p-j).
    const bool is_i = !word.i_part.empty();
    const FieldId f = is_i ? FieldId::Igen : FieldId::Omega;
    const long j = is_i ? word.i_part[0] - 1 : word.l_part[0] - 2;
    const ModuleVector mode = vertex_mode(target, f, p - Rational(j), w);
    return scaled(sign(j) * binomial(p, static_cast<unsigned>(j)), mode);
  }
  if (target.twisted())
    throw std::invalid_argument("twisted modes are only available for derivatives of generator fields");
  if (!p.is_integer()) throw LatticeError("untwisted state mode " + p.str() + " is not in Z");
  // word = X_1 rest with X_1 = u_(n).
  PBWMonomial rest = word;
  FieldId u;
  long n;
  if (!rest.i_part.empty()) {
    u = FieldId::Igen;
    n = -rest.i_part.front();
    rest.i_part.erase(rest.i_part.begin());
  } else {
    u = FieldId::Omega;
    n = -rest.l_part.front() + 1;
    rest.l_part.erase(rest.l_part.begin());
  }
  return iterate_mode(vacuum, u, n, vacuum.vector(rest), *p.to_long(), w);
}

}  // namespace

ModuleVector state_mode(const Module& target, const Module& vacuum, const ModuleVector& s, const Rational& p,
                        const ModuleVector& w) {
  ModuleVector out = target.zero();
  for (const auto& [word, c] : s.terms()) out += c * word_mode(target, vacuum, word, p, w);
  return out;
}

ModuleVector iterate_mode(const Module& vacuum, FieldId u, long n, const ModuleVector& v, long p,
                          const ModuleVector& w) {
  if (vacuum.twisted()) throw std::invalid_argument("the iterate formula is used on untwisted modules only");
  ModuleVector out = vacuum.zero();
  if (w.is_zero() || v.is_zero()) return out;
  const long lw = level_bound(vacuum, w);
  const long wv = level_bound(vacuum, v);
  // v_(r) w = 0 for r > lw + wt(v) - 1, and u_(i) w = 0 for i > lw + wt(u) - 1.
  long i_max = std::max(lw + wv - 1 - p, lw + weight(u) - 1);
  if (n >= 0) i_max = std::min(i_max, n);
  const Rational sign_n = sign(n);
  for (long i = 0; i <= i_max; ++i) {
    const Rational b = sign(i) * binomial(Rational(n), static_cast<unsigned>(i));
    if (b.is_zero()) continue;
    const ModuleVector first =
        vertex_mode(vacuum, u, Rational(n - i), state_mode(vacuum, vacuum, v, Rational(p + i), w));
    const ModuleVector second =
        state_mode(vacuum, vacuum, v, Rational(n + p - i), vertex_mode(vacuum, u, Rational(i), w));
    out += ParamPoly(b) * (first - ParamPoly(sign_n) * second);
  }
  return out;
}

Module companion_vacuum(const Module& mod) {
  if (!mod.twisted()) return mod;
  const auto& d = mod.descriptor();
  return Module(ModuleDescriptor::vacuum(d.param("k1"), ParamPoly(0), d.param("k3")));
}

CommutatorReport verify_commutator(const Module& mod, FieldId a, FieldId b, const Rational& m, const Rational& n,
                                   const ModuleVector& v) {
  const AlgebraDescriptor& alg = mod.algebra();
  const Generator ga = field_generator(a, m, alg);
  const Generator gb = field_generator(b, n, alg);

  CommutatorReport r{a, b, m, n, v, mod.zero(), mod.zero(), std::nullopt};
  r.lhs = mod.act(ga, mod.act(gb, v)) - mod.act(gb, mod.act(ga, v));
  r.rhs = mod.act(bracket(ga, gb, alg), v);
  r.equal = r.lhs == r.rhs;

  // [a_(p), b_(q)] = sum_{j>=0} binom(p, j) (a_(j) b)_(p+q-j).
  const Module vac = companion_vacuum(mod);
  const Rational p = vertex_index(a, m), q = vertex_index(b, n);
  ModuleVector formula = mod.zero();
  bool consistent = true;
  for (long j = 0; j <= weight(a) + weight(b) - 1 && consistent; ++j) {
    const ModuleVector prod = generator_product(vac, a, j, b);
    if (prod.is_zero()) continue;
    try {
      formula += ParamPoly(binomial(p, static_cast<unsigned>(j))) *
                 state_mode(mod, vac, prod, p + q - Rational(j), v);
    } catch (const LatticeError&) {
      consistent = false;
    }
  }
  if (consistent) {
    r.formula_equal = formula == r.lhs;
    r.rhs_formula = std::move(formula);
  }
  return r;
}

std::vector<Rational> field_modes_up_to(FieldId f, const AlgebraDescriptor& alg, long max_mode) {
  const Rational offset = f == FieldId::Igen ? alg.i_offset() : Rational(0);
  std::vector<Rational> out;
  for (long n = -max_mode - 1; n <= max_mode; ++n) {
    const Rational r = Rational(n) + offset;
    if (r.abs() <= Rational(max_mode)) out.push_back(r);
  }
  return out;
}

CommutatorSweep commutator_sweep(const Module& mod, long max_mode, const Rational& max_level) {
  constexpr std::size_t kKeep = 8;
  std::vector<ModuleVector> vectors;
  for (const auto& lvl : mod.levels_up_to(max_level))
    for (const auto& b : mod.basis_at_level(lvl)) vectors.push_back(mod.vector(b));
  CommutatorSweep s;
  for (FieldId a : {FieldId::Omega, FieldId::Igen}) {
    for (FieldId b : {FieldId::Omega, FieldId::Igen}) {
      for (const auto& m : field_modes_up_to(a, mod.algebra(), max_mode)) {
        for (const auto& n : field_modes_up_to(b, mod.algebra(), max_mode)) {
          for (const auto& v : vectors) {
            ++s.checks;
            CommutatorReport r = verify_commutator(mod, a, b, m, n, v);
            if (r.ok()) continue;
            ++s.failures;
            if (s.failed.size() < kKeep) s.failed.push_back(std::move(r));
          }
        }
      }
    }
  }
  return s;
}

bool derivative_property_check(const Module& vacuum, FieldId f, const ModuleVector& v, long max_mode) {
  for (long p = -max_mode; p <= max_mode; ++p) {
    const ModuleVector by_iterate = iterate_mode(vacuum, f, -2, vacuum.cyclic(), p, v);
    const ModuleVector by_rule = ParamPoly(-p) * vertex_mode(vacuum, f, Rational(p - 1), v);
    if (!(by_iterate == by_rule)) return false;
  }
  return true;
}

}  // namespace thv
