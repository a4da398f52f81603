#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "thv/algebra.hpp"
#include "thv/param_poly.hpp"

namespace thv {

enum class ModuleKind { Vacuum, TwistedVerma };

/// Which induced module we work in and how its central elements (and L0 on
/// the cyclic vector) act.
///
/// Vacuum modules use t = 1 and bind "l1", "l2", "l3" (the values of c1, c2,
/// c3). Twisted Verma modules use t >= 2 and bind "k1", "k3", "h".
struct ModuleDescriptor {
  AlgebraDescriptor alg;
  ModuleKind kind = ModuleKind::Vacuum;
  std::map<std::string, ParamPoly> params;

  /// Symbolic defaults: c_i acts as l_i.
  static ModuleDescriptor vacuum(ParamPoly l1 = ParamPoly::var(Param::l1),
                                 ParamPoly l2 = ParamPoly::var(Param::l2),
                                 ParamPoly l3 = ParamPoly::var(Param::l3));
  /// Symbolic defaults: k1 acts as l1, k3 as l3, L0 on the cyclic vector as h.
  static ModuleDescriptor twisted_verma(int t, ParamPoly k1 = ParamPoly::var(Param::l1),
                                        ParamPoly k3 = ParamPoly::var(Param::l3),
                                        ParamPoly h = ParamPoly::var(Param::h));

  /// Throws std::invalid_argument on a kind/t mismatch or missing binding.
  void validate() const;
  const ParamPoly& param(const std::string& name) const;
  /// True when every binding is a constant.
  bool is_concrete() const;

  friend bool operator==(const ModuleDescriptor&, const ModuleDescriptor&) = default;
};

/// Normal-ordered word I-part . L-part applied to the cyclic vector.
///
/// i_part holds k_1 >= ... >= k_s >= 1, the j-th factor being I_{-k_j}
/// (vacuum) or I_{-k_j + 1/t} (twisted). l_part holds m_1 >= ... >= m_r,
/// each factor L_{-m_i}, with m_i >= 2 (vacuum) or m_i >= 1 (twisted).
struct PBWMonomial {
  std::vector<int> i_part;
  std::vector<int> l_part;

  bool empty() const { return i_part.empty() && l_part.empty(); }
  std::size_t length() const { return i_part.size() + l_part.size(); }

  friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;
  friend auto operator<=>(const PBWMonomial&, const PBWMonomial&) = default;
};

/// sigma_t eigenvalue exponent of a vacuum basis vector: (number of I factors) mod t.
int sigma_grade(const PBWMonomial& m, int t);

class Module;

/// Finite ParamPoly-linear combination of PBW monomials of one module.
class ModuleVector {
 public:
  using Terms = std::map<PBWMonomial, ParamPoly>;

  explicit ModuleVector(std::shared_ptr<const ModuleDescriptor> desc, Terms terms = {});

  const ModuleDescriptor& descriptor() const { return *desc_; }
  const std::shared_ptr<const ModuleDescriptor>& descriptor_ptr() const { return desc_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ParamPoly coefficient(const PBWMonomial& m) const;

  void add(const PBWMonomial& m, const ParamPoly& c);
  ModuleVector& operator+=(const ModuleVector& o);
  ModuleVector& operator-=(const ModuleVector& o);
  ModuleVector& operator*=(const ParamPoly& c);

  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
  friend ModuleVector operator*(const ParamPoly& c, ModuleVector a) { return a *= c; }
  friend bool operator==(const ModuleVector& a, const ModuleVector& b);

  /// Components at one level.
  ModuleVector component(const Rational& level) const;
  /// Applies f to every coefficient (e.g. evaluation at concrete parameters).
  template <class F>
  ModuleVector map_coefficients(F&& f) const {
    ModuleVector out(desc_);
    for (const auto& [m, c] : terms_) out.add(m, f(c));
    return out;
  }

  /// e.g. "l3*|0> + 2*I[-1]L[-2]|0>".
  std::string str() const;

 private:
  void check_same(const ModuleVector& o) const;

  std::shared_ptr<const ModuleDescriptor> desc_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const ModuleVector& v);

/// An induced module together with its straightening engine.
///
/// Copies share one memo table of generator-on-monomial products; the table
/// is internally synchronized and only ever caches exact results, so results
/// do not depend on call order.
class Module {
 public:
  explicit Module(ModuleDescriptor desc);

  const ModuleDescriptor& descriptor() const { return *desc_; }
  const AlgebraDescriptor& algebra() const { return desc_->alg; }
  int t() const { return desc_->alg.t(); }
  bool twisted() const { return desc_->kind == ModuleKind::TwistedVerma; }

  ModuleVector zero() const;
  ModuleVector cyclic() const;
  ModuleVector vector(const PBWMonomial& m, const ParamPoly& c = ParamPoly(1)) const;

  /// g . v in PBW normal form.
  ModuleVector act(const Generator& g, const ModuleVector& v) const;
  /// Linear extension of act.
  ModuleVector act(const AlgebraElement& x, const ModuleVector& v) const;
  /// X_1 X_2 ... X_n . v (X_n acts first).
  ModuleVector act_word(const std::vector<Generator>& word, const ModuleVector& v) const;

  /// All monomials of exactly this level in ascending (i_part, l_part) order;
  /// empty when the level is negative or off the (1/t)Z lattice.
  std::vector<PBWMonomial> basis_at_level(const Rational& level) const;
  std::size_t graded_dimension(const Rational& level) const;
  /// Every lattice level 0, 1/t, 2/t, ... up to max_level.
  std::vector<Rational> levels_up_to(const Rational& max_level) const;

  /// Throws InvariantViolation for a monomial that is not a valid basis word.
  void validate(const PBWMonomial& m) const;
  Rational level(const PBWMonomial& m) const;
  /// Highest level among the terms of v (0 for the zero vector).
  Rational max_level(const ModuleVector& v) const;
  std::vector<Generator> factors(const PBWMonomial& m) const;
  /// "I[-1]I[-1]L[-2]|0>"; "|0>" for the cyclic vector.
  std::string word_str(const PBWMonomial& m) const;

  /// Value of a central generator in this module.
  ParamPoly central_value(GenKind k) const;

  /// Parses text such as "l3*|0> + 2*L[-2]I[-1]|0>", straightening every word.
  ModuleVector parse_vector(std::string_view text) const;

  std::size_t cache_size() const;

 private:
  struct Cache;
  using Terms = ModuleVector::Terms;

  const Terms& apply(const Generator& g, const PBWMonomial& w) const;
  Terms compute(const Generator& g, const PBWMonomial& w) const;
  void apply_into(Terms& out, const Generator& g, const Terms& v, const ParamPoly& scale) const;

  std::shared_ptr<const ModuleDescriptor> desc_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace thv
