#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thv/rational.hpp"

namespace thv {

/// Parameter symbols a scalar may depend on. `a` is the free scale used when
/// deriving automorphism constraints.
enum class Param : std::uint8_t { l1 = 0, l2, l3, h, a };

inline constexpr std::size_t kParamCount = 5;
inline constexpr std::array<Param, kParamCount> kAllParams{Param::l1, Param::l2, Param::l3, Param::h,
                                                          Param::a};

std::string_view param_name(Param p);
std::optional<Param> param_from_name(std::string_view name);

using Exponents = std::array<std::uint16_t, kParamCount>;
using Assignment = std::map<Param, Rational>;

/// Sparse multivariate polynomial over Q in the parameters.
///
/// Terms are kept sorted in graded-lex order (higher total degree first, ties
/// broken lexicographically with l1 > l2 > l3 > h > a), with no zero
/// coefficients, so two equal polynomials have identical term lists and text.
class ParamPoly {
 public:
  using Term = std::pair<Exponents, Rational>;

  ParamPoly() = default;
  ParamPoly(int c) : ParamPoly(Rational(c)) {}
  ParamPoly(long c) : ParamPoly(Rational(c)) {}
  ParamPoly(const Rational& c);

  static ParamPoly var(Param p, unsigned power = 1);
  static ParamPoly monomial(const Exponents& e, const Rational& c);
  /// Parses the text form, e.g. "12*l2^2 - 1/2*h + 3". Throws ParseError.
  static ParamPoly parse(std::string_view text);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value when the polynomial is constant.
  std::optional<Rational> constant_value() const;
  unsigned degree_in(Param p) const;
  unsigned total_degree() const;
  bool depends_on(Param p) const { return degree_in(p) > 0; }

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  ParamPoly& operator*=(const Rational& c);

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(ParamPoly a, const Rational& c) { return a *= c; }
  friend ParamPoly operator*(const Rational& c, ParamPoly a) { return a *= c; }
  friend ParamPoly operator*(ParamPoly a, int c) { return a *= Rational(c); }
  friend ParamPoly operator*(int c, ParamPoly a) { return a *= Rational(c); }
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }

  ParamPoly pow(unsigned e) const;

  /// Exact evaluation; throws UnboundParameter if a used parameter is missing.
  Rational eval(const Assignment& assignment) const;
  /// Replaces each bound parameter by a polynomial; unbound ones stay symbolic.
  ParamPoly substitute(const std::map<Param, ParamPoly>& values) const;
  /// Coefficients of p^0, p^1, ... as polynomials in the remaining parameters.
  std::vector<ParamPoly> coefficients_in(Param p) const;
  /// Divides by the leading coefficient so the first term has coefficient 1.
  ParamPoly monic() const;

  std::string str() const;

 private:
  std::vector<Term> terms_;
};

/// True when `a` precedes `b` in the canonical term order.
bool graded_lex_before(const Exponents& a, const Exponents& b);

std::ostream& operator<<(std::ostream& os, const ParamPoly& p);

}  // namespace thv
