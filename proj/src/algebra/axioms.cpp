#include "thv/algebra.hpp"

namespace thv {

std::vector<Generator> generators_up_to(const AlgebraDescriptor& alg, long max_index) {
  std::vector<Generator> out;
  const Rational bound(max_index);
  for (long n = -max_index; n <= max_index; ++n) out.push_back(Generator::L(Rational(n)));
  for (long n = -max_index - 1; n <= max_index; ++n) {
    const Rational r = Rational(n) + alg.i_offset();
    if (r.abs() <= bound) out.push_back(Generator::I(r));
  }
  const auto centrals = alg.twisted() ? std::vector<GenKind>{GenKind::K1, GenKind::K3}
                                      : std::vector<GenKind>{GenKind::C1, GenKind::C2, GenKind::C3};
  for (GenKind k : centrals) out.push_back(Generator::central(k));
  return out;
}

AxiomReport check_lie_axioms(const AlgebraDescriptor& alg, long max_index) {
  const auto gens = generators_up_to(alg, max_index);
  AxiomReport r;
  r.generators = gens.size();
  // Brackets of pairs are reused across triples.
  std::vector<std::vector<AlgebraElement>> table(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) table[i].push_back(bracket(gens[i], gens[j], alg));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      ++r.pairs;
      if (!(table[i][j] + table[j][i]).is_zero()) ++r.antisymmetry_failures;
    }
  }
  const auto nested = [&](std::size_t i, const AlgebraElement& inner) {
    return bracket(AlgebraElement(gens[i]), inner, alg);
  };
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        ++r.triples;
        const AlgebraElement sum = nested(i, table[j][k]) + nested(j, table[k][i]) + nested(k, table[i][j]);
        if (!sum.is_zero()) ++r.jacobi_failures;
      }
    }
  }
  return r;
}

}  // namespace thv
