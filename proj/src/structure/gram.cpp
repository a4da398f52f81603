#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "thv/errors.hpp"
#include "thv/structure.hpp"

namespace thv {

namespace {

void require_twisted(const Module& m, const char* what) {
  if (!m.twisted()) throw std::invalid_argument(std::string(what) + " needs a twisted Verma module");
}

long level_units(const AlgebraDescriptor& alg, const Rational& level) {
  const Rational scaled = level * Rational(alg.t());
  if (!scaled.is_integer()) throw std::domain_error("level " + level.str() + " is not on the 1/t lattice");
  return *scaled.to_long();
}

void partitions(long target, int max_part, const std::function<long(int)>& weight, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
  if (target == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = max_part; k >= 1; --k) {
    const long w = weight(k);
    if (w > target) continue;
    cur.push_back(k);
    partitions(target - w, k, weight, cur, out);
    cur.pop_back();
  }
}

Rational concrete(const ParamPoly& p, const char* what) {
  const auto v = p.constant_value();
  if (!v) throw RequiresConcreteParams(std::string(what) + " needs concrete parameters, got " + p.str());
  return *v;
}

}  // namespace

std::vector<PBWMonomial> raising_words_at_level(const AlgebraDescriptor& alg, const Rational& level) {
  if (level.sign() < 0) return {};
  const Rational scaled = level * Rational(alg.t());
  if (!scaled.is_integer()) return {};
  const long units = *scaled.to_long();
  const long t = alg.t();
  // I[k - 1 + 1/t] lowers by (k - 1) t + 1 units, L[m] by m t.
  const auto i_weight = [&](int k) -> long { return (k - 1) * t + 1; };
  const auto l_weight = [&](int m) -> long { return m * t; };
  std::vector<PBWMonomial> out;
  std::vector<int> cur;
  for (long i_units = 0; i_units <= units; ++i_units) {
    std::vector<std::vector<int>> is, ls;
    partitions(i_units, static_cast<int>(i_units / t + 1), i_weight, cur, is);
    partitions(units - i_units, static_cast<int>((units - i_units) / t + 1), l_weight, cur, ls);
    for (const auto& ip : is)
      for (const auto& lp : ls) out.push_back(PBWMonomial{ip, lp});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Generator> raising_word(const PBWMonomial& label, const AlgebraDescriptor& alg) {
  std::vector<Generator> word;
  for (auto it = label.l_part.rbegin(); it != label.l_part.rend(); ++it) word.push_back(Generator::L(Rational(*it)));
  for (auto it = label.i_part.rbegin(); it != label.i_part.rend(); ++it)
    word.push_back(Generator::I(Rational(*it - 1) + alg.i_offset()));
  return word;
}

GramMatrix gram_matrix(const Module& verma, const Rational& level) {
  require_twisted(verma, "gram_matrix");
  if (level.sign() <= 0) throw std::domain_error("gram_matrix: level must be positive, got " + level.str());
  level_units(verma.algebra(), level);
  GramMatrix g{level, raising_words_at_level(verma.algebra(), level), verma.basis_at_level(level), {}};
  std::vector<ModuleVector> column_vectors;
  for (const auto& c : g.columns) column_vectors.push_back(verma.vector(c));
  for (const auto& r : g.rows) {
    const auto word = raising_word(r, verma.algebra());
    std::vector<ParamPoly> row;
    for (const auto& v : column_vectors) row.push_back(verma.act_word(word, v).coefficient(PBWMonomial{}));
    g.entries.push_back(std::move(row));
  }
  return g;
}

RationalMatrix evaluate(const GramMatrix& g) {
  RationalMatrix out;
  for (const auto& row : g.entries) {
    std::vector<Rational> r;
    for (const auto& e : row) r.push_back(concrete(e, "Gram evaluation"));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Generator> singular_test_generators(const AlgebraDescriptor& alg) {
  return {Generator::L(Rational(1)), Generator::L(Rational(2)), Generator::I(alg.i_offset()),
          Generator::I(Rational(1) + alg.i_offset())};
}

std::vector<ModuleVector> singular_vectors(const Module& verma, const Rational& level) {
  require_twisted(verma, "singular_vectors");
  if (!verma.descriptor().is_concrete())
    throw RequiresConcreteParams("singular_vectors needs concrete parameters");
  const auto basis = verma.basis_at_level(level);
  const auto gens = singular_test_generators(verma.algebra());

  // One row per (generator, image monomial), one column per basis word.
  std::map<std::pair<std::size_t, PBWMonomial>, std::size_t> row_index;
  RationalMatrix m;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const ModuleVector v = verma.vector(basis[j]);
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const ModuleVector image = verma.act(gens[gi], v);
      for (const auto& [mono, c] : image.terms()) {
        auto [it, inserted] = row_index.try_emplace({gi, mono}, m.size());
        if (inserted) m.emplace_back(basis.size(), Rational(0));
        m[it->second][j] = concrete(c, "singular_vectors");
      }
    }
  }
  std::vector<ModuleVector> out;
  for (const auto& x : nullspace(std::move(m), basis.size())) {
    ModuleVector v = verma.zero();
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (!x[j].is_zero()) v.add(basis[j], ParamPoly(x[j]));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<CharacterRow> verma_character(const Module& mod, const Rational& max_level) {
  std::vector<CharacterRow> out;
  for (const auto& lvl : mod.levels_up_to(max_level)) {
    const std::size_t d = mod.graded_dimension(lvl);
    out.push_back({lvl, d, d, 0});
  }
  return out;
}

std::vector<CharacterRow> irreducible_character(const Module& verma, const Rational& max_level) {
  require_twisted(verma, "irreducible_character");
  if (!verma.descriptor().is_concrete())
    throw RequiresConcreteParams("irreducible_character needs concrete parameters");
  auto rows = verma_character(verma, max_level);
  for (auto& r : rows) {
    if (r.level.is_zero()) continue;
    const GramMatrix g = gram_matrix(verma, r.level);
    r.irr_dim = rank(evaluate(g), g.columns.size());
    r.nullity = r.verma_dim - r.irr_dim;
  }
  return rows;
}

}  // namespace thv
