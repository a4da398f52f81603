#include <doctest.h>

#include <random>
#include <set>

#include "generators.hpp"
#include "thv/errors.hpp"
#include "thv/structure.hpp"
#include "thv/structure_json.hpp"

using namespace thv;

namespace {

const ParamPoly a = ParamPoly::var(Param::a);
const ParamPoly l1 = ParamPoly::var(Param::l1);
const ParamPoly l2 = ParamPoly::var(Param::l2);
const ParamPoly l3 = ParamPoly::var(Param::l3);
const ParamPoly h = ParamPoly::var(Param::h);

Module verma(int t, Rational k1, Rational k3, Rational hv) {
  return Module(ModuleDescriptor::twisted_verma(t, ParamPoly(k1), ParamPoly(k3), ParamPoly(hv)));
}

}  // namespace

TEST_CASE("automorphism group examples") {
  CHECK(automorphism_group(1, 5).label == AutCase::Trivial);
  CHECK(automorphism_group(0, 1).label == AutCase::Z2);
  CHECK(automorphism_group(0, 0).label == AutCase::Cx);
  CHECK(automorphism_group(Rational(-3, 2), 0).label == AutCase::Trivial);
  CHECK(automorphism_group(0, 1).solution_gcd.str() == "a^2 - 1");
  CHECK(automorphism_group(0, 0).solution_gcd.is_zero());
}

TEST_CASE("automorphism constraints are derived, not assumed") {
  const auto r = automorphism_group(0, 1);
  REQUIRE(r.trace.size() == 2);
  CHECK(r.trace[0].relation == "L[1]I[-1]|0>");
  CHECK(r.trace[0].constraint == (a - 1) * l2);
  CHECK(r.trace[1].relation == "I[1]I[-1]|0>");
  CHECK(r.trace[1].constraint == (a.pow(2) - 1) * l3);
}

TEST_CASE("automorphism label depends only on which of l2, l3 vanish") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> coin(0, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const Rational x = coin(rng) == 0 ? Rational(0) : testing::random_rational(rng);
    const Rational y = coin(rng) == 0 ? Rational(0) : testing::random_rational(rng);
    const AutCase expected = !x.is_zero() ? AutCase::Trivial : (!y.is_zero() ? AutCase::Z2 : AutCase::Cx);
    CHECK(automorphism_group(x, y).label == expected);
  }
}

TEST_CASE("gram matrix examples") {
  const Module m2(ModuleDescriptor::twisted_verma(2));
  auto g = gram_matrix(m2, Rational(1, 2));
  REQUIRE(g.entries.size() == 1);
  CHECK(g.entries[0][0] == ParamPoly(Rational(1, 2)) * l3);

  const Module m3(ModuleDescriptor::twisted_verma(3));
  g = gram_matrix(m3, Rational(2, 3));
  REQUIRE(g.entries.size() == 1);
  REQUIRE(g.entries[0].size() == 1);
  CHECK(g.entries[0][0].is_zero());

  g = gram_matrix(m2, Rational(1));
  const PBWMonomial l_minus_1{{}, {1}};
  std::size_t idx = 0;
  while (idx < g.columns.size() && !(g.columns[idx] == l_minus_1)) ++idx;
  REQUIRE(idx < g.columns.size());
  CHECK(g.rows[idx] == l_minus_1);
  CHECK(g.entries[idx][idx] == ParamPoly(2) * h);
}

TEST_CASE("gram matrix preconditions") {
  const Module m2(ModuleDescriptor::twisted_verma(2));
  CHECK_THROWS_AS(gram_matrix(m2, Rational(0)), std::domain_error);
  CHECK_THROWS_AS(gram_matrix(m2, Rational(-1, 2)), std::domain_error);
  CHECK_THROWS_AS(gram_matrix(m2, Rational(1, 3)), std::domain_error);
  CHECK_THROWS_AS(gram_matrix(Module(ModuleDescriptor::vacuum()), Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(gram_matrix(m2, Rational(1, 2))), RequiresConcreteParams);
}

TEST_CASE("t = 2 gram matrices are symmetric") {
  const Module m2(ModuleDescriptor::twisted_verma(2));
  for (const auto& lvl : m2.levels_up_to(Rational(3))) {
    if (lvl.is_zero()) continue;
    const auto g = gram_matrix(m2, lvl);
    REQUIRE(g.square());
    CHECK(g.rows == g.columns);
    for (std::size_t i = 0; i < g.rows.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) CHECK(g.entries[i][j] == g.entries[j][i]);
  }
}

TEST_CASE("raising words pair with lowering words of the same level") {
  for (int t : {2, 3, 4}) {
    const AlgebraDescriptor alg(t);
    for (long u = 1; u <= 3 * t; ++u) {
      const Rational lvl(u, t);
      for (const auto& w : raising_words_at_level(alg, lvl)) {
        Rational total = 0;
        for (const auto& g : raising_word(w, alg)) total += g.index;
        CHECK(total == lvl);
      }
    }
  }
}

TEST_CASE("symbolic gram entries specialize to concrete ones") {
  std::mt19937 rng(5);
  for (int t : {2, 3}) {
    const Module sym(ModuleDescriptor::twisted_verma(t));
    for (int trial = 0; trial < 3; ++trial) {
      const Rational k1 = testing::random_rational(rng), k3 = testing::random_rational(rng),
                     hv = testing::random_rational(rng);
      const Module conc = verma(t, k1, k3, hv);
      for (const auto& lvl : sym.levels_up_to(Rational(2))) {
        if (lvl.is_zero()) continue;
        const auto gs = gram_matrix(sym, lvl);
        const auto gc = evaluate(gram_matrix(conc, lvl));
        for (std::size_t i = 0; i < gs.entries.size(); ++i)
          for (std::size_t j = 0; j < gs.entries[i].size(); ++j)
            CHECK(gs.entries[i][j].eval({{Param::l1, k1}, {Param::l3, k3}, {Param::h, hv}}) == gc[i][j]);
      }
    }
  }
}

TEST_CASE("singular vector examples") {
  const Module m3 = verma(3, 1, 7, Rational(2, 5));
  const auto s3 = singular_vectors(m3, Rational(2, 3));
  REQUIRE(s3.size() == 1);
  CHECK(s3[0].terms().size() == 1);
  CHECK(s3[0].terms().begin()->first == PBWMonomial{{1}, {}});

  CHECK(singular_vectors(verma(2, 1, 1, 0), Rational(1, 2)).empty());

  const Module m = verma(2, 1, 1, 0);
  const auto g = evaluate(gram_matrix(m, Rational(1)));
  CHECK(singular_vectors(m, Rational(1)).size() == g.size() - rank(g, g.size()));
  CHECK_THROWS_AS(singular_vectors(Module(ModuleDescriptor::twisted_verma(2)), Rational(1)), RequiresConcreteParams);
}

TEST_CASE("singular vectors are killed by every raising mode") {
  for (const Module& m : {verma(3, 1, 7, Rational(2, 5)), verma(2, 1, 0, 0), verma(4, 2, 1, 0)}) {
    for (const auto& lvl : m.levels_up_to(Rational(2))) {
      for (const auto& v : singular_vectors(m, lvl)) {
        for (long n = 1; n <= 6; ++n) CHECK(m.act(Generator::L(Rational(n)), v).is_zero());
        for (long n = 0; n <= 5; ++n) CHECK(m.act(Generator::I(Rational(n) + m.algebra().i_offset()), v).is_zero());
      }
    }
  }
}

TEST_CASE("the singular test generators generate every raising mode up to index 6") {
  for (int t : {2, 3, 4}) {
    const AlgebraDescriptor alg(t);
    std::set<Generator> reached;
    std::vector<Generator> frontier = singular_test_generators(alg);
    for (const auto& g : frontier) reached.insert(g);
    const Rational bound(6);
    while (!frontier.empty()) {
      std::vector<Generator> next;
      for (const auto& x : std::vector<Generator>(reached.begin(), reached.end())) {
        for (const auto& y : frontier) {
          const AlgebraElement xy = bracket(x, y, alg);
          for (const auto& [g, c] : xy.terms()) {
            if (g.is_central() || g.index > bound || reached.count(g)) continue;
            reached.insert(g);
            next.push_back(g);
          }
        }
      }
      frontier = std::move(next);
    }
    for (long n = 1; n <= 6; ++n) CHECK(reached.count(Generator::L(Rational(n))));
    for (long n = 0; n <= 5; ++n) CHECK(reached.count(Generator::I(Rational(n) + alg.i_offset())));
  }
}

TEST_CASE("singular vectors lie in the gram radical") {
  for (const Module& m : {verma(2, 1, 0, 0), verma(3, 1, 7, Rational(2, 5)), verma(2, 3, 1, Rational(-1, 2))}) {
    for (const auto& lvl : m.levels_up_to(Rational(2))) {
      if (lvl.is_zero()) continue;
      const auto g = gram_matrix(m, lvl);
      const auto gv = evaluate(g);
      for (const auto& v : singular_vectors(m, lvl)) {
        for (const auto& row : gv) {
          Rational dot = 0;
          for (std::size_t j = 0; j < g.columns.size(); ++j)
            dot += row[j] * *v.coefficient(g.columns[j]).constant_value();
          CHECK(dot.is_zero());
        }
      }
    }
  }
}

TEST_CASE("characters") {
  const auto rows = irreducible_character(verma(2, 1, 1, Rational(1, 3)), Rational(1));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].irr_dim == 1);
  CHECK(rows[1].irr_dim == 1);
  CHECK(rows[2].irr_dim == 2);
  CHECK(singular_vectors(verma(2, 1, 1, Rational(1, 3)), Rational(1, 2)).empty());
  CHECK(singular_vectors(verma(2, 1, 1, Rational(1, 3)), Rational(1)).empty());

  const auto r3 = irreducible_character(verma(3, 1, 1, 0), Rational(2, 3));
  CHECK(r3.back().irr_dim == 0);
  CHECK(r3.back().nullity == 1);

  for (const Module& m : {verma(2, 1, 1, Rational(1, 3)), verma(2, 1, 0, 0), verma(3, 2, 0, 1)}) {
    const auto irr = irreducible_character(m, Rational(2));
    const auto full = verma_character(m, Rational(2));
    REQUIRE(irr.size() == full.size());
    for (std::size_t i = 0; i < irr.size(); ++i) {
      CHECK(irr[i].irr_dim + irr[i].nullity == full[i].verma_dim);
      CHECK(irr[i].verma_dim == m.graded_dimension(irr[i].level));
    }
    CHECK(irr[0].irr_dim == 1);
  }
  CHECK_THROWS_AS(irreducible_character(Module(ModuleDescriptor::twisted_verma(2)), Rational(1)),
                  RequiresConcreteParams);
  CHECK(io::to_csv(irreducible_character(verma(2, 1, 1, 1), Rational(1, 2))) ==
        "level,verma_dim,irr_dim,nullity\n0,1,1,0\n1/2,1,1,0\n");
}

TEST_CASE("conformal decomposition") {
  auto r = conformal_decomposition_check(2, 0, 1, Rational(3));
  CHECK(r.central_charge == Rational(1));
  CHECK(r.ok());
  CHECK(r.commute_checks > 0);
  r = conformal_decomposition_check(26, 1, 1, Rational(2), 2);
  CHECK(r.central_charge == Rational(37));
  CHECK(r.ok());
  r = conformal_decomposition_check(Rational(1, 2), Rational(-2, 3), 3, Rational(2), 2);
  CHECK(r.central_charge == Rational(1, 2) - 1 + Rational(12) * Rational(4, 9) / 3);
  CHECK(r.ok());
  CHECK_THROWS_AS(conformal_decomposition_check(2, 0, 0, Rational(2)), std::domain_error);
}

TEST_CASE("report JSON shapes") {
  const auto j = io::to_json(automorphism_group(0, 1));
  CHECK(j.at("case") == "Z2");
  CHECK(j.at("trace").size() == 2);
  const auto g = io::to_json(gram_matrix(Module(ModuleDescriptor::twisted_verma(2)), Rational(1, 2)));
  CHECK(g.at("entries").dump() == R"([["1/2*l3"]])");
  CHECK(g.at("level") == "1/2");
}
