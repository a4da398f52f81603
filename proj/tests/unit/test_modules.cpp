#include <doctest.h>

#include <random>
#include <vector>

#include "generators.hpp"
#include "thv/errors.hpp"
#include "thv/json_io.hpp"
#include "thv/modules.hpp"

using namespace thv;

namespace {

Generator L(long n) { return Generator::L(Rational(n)); }
Generator I(const Rational& r) { return Generator::I(r); }

// Coefficients of prod_w 1/(1 - q^w) over the given part weights, truncated
// at q^n. Weights are in units of 1/t.
std::vector<long> euler_product(const std::vector<long>& weights, long n) {
  std::vector<long> series(n + 1, 0);
  series[0] = 1;
  for (long w : weights) {
    if (w <= 0 || w > n) continue;
    for (long k = w; k <= n; ++k) series[k] += series[k - w];
  }
  return series;
}

std::vector<long> vacuum_dims(long n) {
  std::vector<long> w;
  for (long k = 1; k <= n; ++k) w.push_back(k);  // I_{-k}
  for (long m = 2; m <= n; ++m) w.push_back(m);  // L_{-m}
  return euler_product(w, n);
}

std::vector<long> twisted_dims(int t, long n_units) {
  std::vector<long> w;
  for (long k = 1; k * t - 1 <= n_units; ++k) w.push_back(k * t - 1);  // I_{-k+1/t}
  for (long m = 1; m * t <= n_units; ++m) w.push_back(m * t);         // L_{-m}
  return euler_product(w, n_units);
}

std::vector<Generator> mode_pool(const Module& mod, long span) {
  std::vector<Generator> pool;
  const Rational off = mod.algebra().i_offset();
  for (long n = -span; n <= span; ++n) {
    pool.push_back(L(n));
    pool.push_back(I(Rational(n) + off));
  }
  return pool;
}

}  // namespace

TEST_CASE("vacuum graded dimensions") {
  const Module v(ModuleDescriptor::vacuum());
  const std::vector<std::size_t> expected{1, 1, 3, 5, 10};
  for (long n = 0; n <= 4; ++n) CHECK(v.graded_dimension(Rational(n)) == expected[n]);
  const auto oracle = vacuum_dims(12);
  for (long n = 0; n <= 12; ++n) CHECK(static_cast<long>(v.graded_dimension(Rational(n))) == oracle[n]);
  CHECK(v.graded_dimension(Rational(1, 2)) == 0);
  CHECK(v.graded_dimension(Rational(-1)) == 0);
}

TEST_CASE("twisted graded dimensions") {
  const Module m2(ModuleDescriptor::twisted_verma(2));
  CHECK(m2.graded_dimension(Rational(1, 2)) == 1);
  CHECK(m2.graded_dimension(Rational(1)) == 2);
  CHECK(m2.graded_dimension(Rational(3, 2)) == 3);
  CHECK(m2.graded_dimension(Rational(2)) == 5);
  const Module m3(ModuleDescriptor::twisted_verma(3));
  CHECK(m3.graded_dimension(Rational(2, 3)) == 1);
  CHECK(m3.graded_dimension(Rational(1, 3)) == 0);
  for (int t : {2, 3, 4, 5}) {
    const Module m(ModuleDescriptor::twisted_verma(t));
    const long n_units = 8L * t;
    const auto oracle = twisted_dims(t, n_units);
    for (long u = 0; u <= n_units; ++u)
      CHECK_MESSAGE(static_cast<long>(m.graded_dimension(Rational(u, t))) == oracle[u], "t=", t, " u=", u);
  }
}

TEST_CASE("basis words are valid and of the requested level") {
  for (const Module& m : {Module(ModuleDescriptor::vacuum()), Module(ModuleDescriptor::twisted_verma(3))}) {
    for (const auto& lvl : m.levels_up_to(Rational(5))) {
      const auto basis = m.basis_at_level(lvl);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        CHECK_NOTHROW(m.validate(basis[i]));
        CHECK(m.level(basis[i]) == lvl);
        if (i > 0) CHECK(basis[i - 1] < basis[i]);
      }
    }
  }
}

TEST_CASE("action examples") {
  const Module v(ModuleDescriptor::vacuum());
  const auto i1 = v.act(I(-1), v.cyclic());
  CHECK(i1.str() == "I[-1]|0>");
  CHECK(v.act(L(1), i1).str() == "-2*l2*|0>");
  CHECK(v.act(I(1), i1).str() == "l3*|0>");
  CHECK(v.act(L(2), v.act(L(-2), v.cyclic())).str() == "1/2*l1*|0>");
  // L_{-2} I_{-1} = I_{-1} L_{-2} + [L_{-2}, I_{-1}] = I_{-1} L_{-2} + I_{-3}.
  CHECK(v.parse_vector("L[-2]I[-1]|0>").str() == "I[-1]L[-2]|0> + I[-3]|0>");
  CHECK(v.act(Generator::central(GenKind::C3), i1) == ParamPoly::var(Param::l3) * i1);

  const Module m(ModuleDescriptor::twisted_verma(2));
  const auto w = m.act(I(Rational(-1, 2)), m.cyclic());
  CHECK(m.act(I(Rational(1, 2)), w).str() == "1/2*l3*|0>");
  CHECK(m.act(L(0), m.cyclic()).str() == "h*|0>");
  CHECK(m.act(L(1), m.act(L(-1), m.cyclic())).str() == "2*h*|0>");
}

TEST_CASE("cyclic vector annihilation") {
  const Module v(ModuleDescriptor::vacuum());
  for (long n = -1; n <= 5; ++n) CHECK(v.act(L(n), v.cyclic()).is_zero());
  for (long n = 0; n <= 5; ++n) CHECK(v.act(I(n), v.cyclic()).is_zero());
  CHECK_FALSE(v.act(L(-2), v.cyclic()).is_zero());
  CHECK_FALSE(v.act(I(-1), v.cyclic()).is_zero());
  for (int t : {2, 3}) {
    const Module m(ModuleDescriptor::twisted_verma(t));
    for (long n = 1; n <= 5; ++n) CHECK(m.act(L(n), m.cyclic()).is_zero());
    for (long n = 0; n <= 5; ++n) CHECK(m.act(I(Rational(n) + Rational(1, t)), m.cyclic()).is_zero());
  }
}

TEST_CASE("L0 is the grading operator") {
  const Module v(ModuleDescriptor::vacuum());
  for (const auto& lvl : v.levels_up_to(Rational(5)))
    for (const auto& b : v.basis_at_level(lvl)) CHECK(v.act(L(0), v.vector(b)) == ParamPoly(lvl) * v.vector(b));
  const Module m(ModuleDescriptor::twisted_verma(3));
  const ParamPoly h = ParamPoly::var(Param::h);
  for (const auto& lvl : m.levels_up_to(Rational(3)))
    for (const auto& b : m.basis_at_level(lvl))
      CHECK(m.act(L(0), m.vector(b)) == (h + ParamPoly(lvl)) * m.vector(b));
}

TEST_CASE("action is a representation of the bracket") {
  std::mt19937 rng(99);
  for (const Module& mod : {Module(ModuleDescriptor::vacuum()), Module(ModuleDescriptor::twisted_verma(2)),
                            Module(ModuleDescriptor::twisted_verma(3))}) {
    const auto pool = mode_pool(mod, 3);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::vector<PBWMonomial> words;
    for (const auto& lvl : mod.levels_up_to(Rational(3)))
      for (const auto& b : mod.basis_at_level(lvl)) words.push_back(b);
    std::uniform_int_distribution<std::size_t> pick_word(0, words.size() - 1);
    for (int trial = 0; trial < 120; ++trial) {
      const Generator x = pool[pick(rng)], y = pool[pick(rng)];
      const ModuleVector v = mod.vector(words[pick_word(rng)]);
      const auto lhs = mod.act(x, mod.act(y, v)) - mod.act(y, mod.act(x, v));
      const auto rhs = mod.act(bracket(x, y, mod.algebra()), v);
      CHECK_MESSAGE(lhs == rhs, "t=", mod.t(), " x=", x.str(), " y=", y.str(), " v=", v.str());
    }
  }
}

TEST_CASE("memoized results do not depend on call order") {
  const Module warm(ModuleDescriptor::vacuum());
  const auto probe = warm.parse_vector("I[-2]L[-3]|0>");
  for (long n = -3; n <= 3; ++n) (void)warm.act(L(n), warm.act(I(-1), probe));
  CHECK(warm.cache_size() > 0);
  const Module cold(ModuleDescriptor::vacuum());
  const auto probe2 = cold.parse_vector("I[-2]L[-3]|0>");
  for (long n = 3; n >= -3; --n) CHECK(cold.act(I(n), probe2) == warm.act(I(n), probe));
}

TEST_CASE("invalid words and mismatched modules") {
  const Module v(ModuleDescriptor::vacuum());
  CHECK_THROWS_AS(v.vector(PBWMonomial{{}, {1}}), InvariantViolation);
  CHECK_THROWS_AS(v.vector(PBWMonomial{{1, 2}, {}}), InvariantViolation);
  CHECK_THROWS_AS(v.vector(PBWMonomial{{0}, {}}), InvariantViolation);
  CHECK_NOTHROW(Module(ModuleDescriptor::twisted_verma(2)).vector(PBWMonomial{{}, {1}}));
  CHECK_THROWS_AS(v.act(I(Rational(1, 2)), v.cyclic()), MalformedGenerator);
  const Module m(ModuleDescriptor::twisted_verma(2));
  CHECK_THROWS_AS(v.act(L(0), m.cyclic()), std::invalid_argument);
  CHECK_THROWS_AS(v.parse_vector("L[-2]"), ParseError);
  CHECK_THROWS_AS(ModuleDescriptor::twisted_verma(1).validate(), std::invalid_argument);
}

TEST_CASE("vector text and JSON round trips") {
  const Module v(ModuleDescriptor::vacuum());
  const auto x = v.parse_vector("l3*|0> + 2*I[-1]L[-2]|0>");
  CHECK(x.str() == "l3*|0> + 2*I[-1]L[-2]|0>");
  CHECK(v.parse_vector(x.str()) == x);
  CHECK(io::vector_from_json(v, io::to_json(x)) == x);
  CHECK(v.zero().str() == "0");

  const auto d = ModuleDescriptor::twisted_verma(3, ParamPoly(2), ParamPoly::parse("l3 + 1"), ParamPoly(Rational(1, 3)));
  CHECK(io::descriptor_from_json(io::to_json(d)) == d);
  CHECK_THROWS_WITH_AS(io::descriptor_from_json(io::json::parse(R"({"t": 1, "kind": "verma"})")),
                       doctest::Contains("kind"), ParseError);
  CHECK_THROWS_WITH_AS(io::descriptor_from_json(io::json::parse(R"({"t": 2, "kind": "twisted_verma", "params": {"k2": "1"}})")),
                       doctest::Contains("params.k2"), ParseError);
}

TEST_CASE("sigma grade counts I factors mod t") {
  CHECK(sigma_grade(PBWMonomial{{2, 1}, {3}}, 2) == 0);
  CHECK(sigma_grade(PBWMonomial{{2, 1, 1}, {}}, 2) == 1);
  CHECK(sigma_grade(PBWMonomial{{2, 1, 1}, {}}, 3) == 0);
  CHECK(sigma_grade(PBWMonomial{}, 1) == 0);
}
