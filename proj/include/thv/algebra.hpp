#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "thv/param_poly.hpp"
#include "thv/rational.hpp"

namespace thv {

enum class GenKind : std::uint8_t { L, I, C1, C2, C3, K1, K3 };

/// One basis symbol: L_n, I_r, or a central element (index fixed at 0).
struct Generator {
  GenKind kind = GenKind::L;
  Rational index;

  static Generator L(const Rational& n) { return {GenKind::L, n}; }
  static Generator I(const Rational& r) { return {GenKind::I, r}; }
  static Generator central(GenKind k) { return {k, Rational(0)}; }

  bool is_central() const { return kind != GenKind::L && kind != GenKind::I; }

  /// "L[-2]", "I[-1/2]", "c1", "k3".
  std::string str() const;
  /// Inverse of str(); does not check validity for any particular algebra.
  static Generator parse(std::string_view text);

  friend bool operator==(const Generator&, const Generator&) = default;
  friend std::strong_ordering operator<=>(const Generator&, const Generator&) = default;
};

std::ostream& operator<<(std::ostream& os, const Generator& g);

/// Selects the algebra: t = 1 is the untwisted algebra with centrals c1, c2, c3
/// and integral I-modes; t >= 2 is the twisted-sector algebra with I-modes in
/// Z + 1/t and centrals k1, k3.
class AlgebraDescriptor {
 public:
  explicit AlgebraDescriptor(int t = 1);
  int t() const { return t_; }
  bool twisted() const { return t_ >= 2; }
  /// The fractional part carried by I-mode indices: 0 for t = 1, 1/t otherwise.
  Rational i_offset() const { return twisted() ? Rational(1, t_) : Rational(0); }

  friend bool operator==(const AlgebraDescriptor&, const AlgebraDescriptor&) = default;

 private:
  int t_;
};

bool is_valid(const Generator& g, const AlgebraDescriptor& alg);
/// Throws MalformedGenerator if g does not belong to alg.
void validate(const Generator& g, const AlgebraDescriptor& alg);

/// ad L0 eigenvalue: degree(L_n) = -n, degree(I_r) = -r, centrals 0.
Rational degree(const Generator& g);

/// Finite ParamPoly-linear combination of generators, canonically ordered.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(const Generator& g, ParamPoly coeff = ParamPoly(1));

  /// Parses e.g. "4*L[0] + 1/2*c1" or "(l1 + 1)*I[-1/2]". Throws ParseError.
  static AlgebraElement parse(std::string_view text);

  const std::map<Generator, ParamPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ParamPoly coefficient(const Generator& g) const;

  void add(const Generator& g, const ParamPoly& coeff);
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const ParamPoly& c);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const ParamPoly& c, AlgebraElement a) { return a *= c; }
  friend AlgebraElement operator-(AlgebraElement a) { return a *= ParamPoly(-1); }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  std::string str() const;

 private:
  std::map<Generator, ParamPoly> terms_;
};

std::ostream& operator<<(std::ostream& os, const AlgebraElement& x);

/// "coeff*symbol" as used by the text forms of elements and vectors:
/// the coefficient is dropped when 1, parenthesized when it has several terms.
std::string scaled_symbol(const ParamPoly& coeff, const std::string& symbol, bool star = true);
/// Joins pieces from scaled_symbol with " + " / " - ".
std::string join_signed(const std::vector<std::string>& pieces);

/// Lie bracket of two generators; throws MalformedGenerator for invalid input.
AlgebraElement bracket(const Generator& x, const Generator& y, const AlgebraDescriptor& alg);
/// Bilinear extension of bracket.
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y, const AlgebraDescriptor& alg);

}  // namespace thv

namespace thv {

/// Every L and I generator of alg with |index| <= max_index, then the centrals.
std::vector<Generator> generators_up_to(const AlgebraDescriptor& alg, long max_index);

struct AxiomReport {
  std::size_t generators = 0;
  std::size_t pairs = 0, antisymmetry_failures = 0;
  std::size_t triples = 0, jacobi_failures = 0;
  bool ok() const { return antisymmetry_failures == 0 && jacobi_failures == 0; }
};

/// Antisymmetry on all ordered pairs and the Jacobi identity on all ordered
/// triples of generators_up_to(alg, max_index).
AxiomReport check_lie_axioms(const AlgebraDescriptor& alg, long max_index);

}  // namespace thv
