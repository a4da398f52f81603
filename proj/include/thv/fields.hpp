#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thv/modules.hpp"

namespace thv {

/// Generating fields: Omega is L(z) with state L[-2]|0>, Igen is I(z) with state I[-1]|0>.
enum class FieldId { Omega, Igen };

std::string_view field_name(FieldId f);
/// "Omega" / "Igen" (also accepts "omega", "I"); throws ParseError.
FieldId field_from_name(std::string_view name);

/// The generator behind mode n of f in the L-convention: Omega n -> L[n], Igen n -> I[n].
/// Throws LatticeError when n is off the mode lattice of the module's algebra.
Generator field_generator(FieldId f, const Rational& n, const AlgebraDescriptor& alg);

/// f_n . v in the L-convention.
ModuleVector field_mode(const Module& mod, FieldId f, const Rational& n, const ModuleVector& v);

/// f_(p) . v in the vertex convention Y(f, z) = sum f_(p) z^{-p-1}:
/// Omega_(p) = L[p-1], Igen_(p) = I[p].
ModuleVector vertex_mode(const Module& mod, FieldId f, const Rational& p, const ModuleVector& v);

/// The state of f in a vacuum module.
ModuleVector field_state(const Module& vacuum, FieldId f);

/// u_(j) w for generator states u, w of a vacuum module.
ModuleVector generator_product(const Module& vacuum, FieldId u, long j, FieldId w);

/// Mode s_(p) of a vacuum state s acting on a vector of `target`.
///
/// States built from a single lowering mode are derivatives of a generator
/// field and act on any module; longer words act through the iterate formula
/// and need an untwisted target. Throws LatticeError when p is off the mode
/// lattice of a nonzero component of s.
ModuleVector state_mode(const Module& target, const Module& vacuum, const ModuleVector& s, const Rational& p,
                        const ModuleVector& w);

/// (u_(n) v)_(p) w by the iterate formula
///   sum_{i>=0} (-1)^i binom(n, i) [u_(n-i) v_(p+i) w - (-1)^n v_(n+p-i) u_(i) w],
/// truncated where every remaining term vanishes by grading. Untwisted only.
ModuleVector iterate_mode(const Module& vacuum, FieldId u, long n, const ModuleVector& v, long p,
                          const ModuleVector& w);

/// The vacuum module whose generator products drive the commutator formula
/// in `mod`: `mod` itself when untwisted, otherwise (l1, l2, l3) = (k1, 0, k3).
Module companion_vacuum(const Module& mod);

struct CommutatorReport {
  FieldId a, b;
  Rational m, n;  // L-convention mode indices
  ModuleVector v;
  ModuleVector lhs;  // a_m b_n v - b_n a_m v
  ModuleVector rhs;  // [a_m, b_n] . v through the algebra bracket
  /// sum_j binom(p, j) (a_(j) b)_(p+q-j) v; absent when some a_(j) b has a
  /// component whose modes cannot sit at p+q-j.
  std::optional<ModuleVector> rhs_formula;
  bool equal = false;          // lhs == rhs
  bool formula_equal = false;  // lhs == rhs_formula
  bool ok() const { return equal && formula_equal; }
};

CommutatorReport verify_commutator(const Module& mod, FieldId a, FieldId b, const Rational& m, const Rational& n,
                                   const ModuleVector& v);

struct CommutatorSweep {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<CommutatorReport> failed;  // the first few
  bool ok() const { return failures == 0; }
};

/// verify_commutator for every (a, b) in {Omega, Igen}^2, every pair of
/// lattice modes with |m|, |n| <= max_mode, and every basis vector of level
/// <= max_level.
CommutatorSweep commutator_sweep(const Module& mod, long max_mode, const Rational& max_level);

/// Lattice mode indices of f with |n| <= max_mode.
std::vector<Rational> field_modes_up_to(FieldId f, const AlgebraDescriptor& alg, long max_mode);

/// Exponent box for Laurent2, bounds inclusive and in units of 1/t.
struct Window {
  long x1_min = 0, x1_max = 0, x2_min = 0, x2_max = 0;
  bool empty() const { return x1_min > x1_max || x2_min > x2_max; }
  bool contains(long e1, long e2) const { return e1 >= x1_min && e1 <= x1_max && e2 >= x2_min && e2 <= x2_max; }
  friend bool operator==(const Window&, const Window&) = default;
};

/// Truncated formal series sum c_{e1,e2} x1^{e1/t} x2^{e2/t}.
///
/// Terms are stored only inside `window`; `interior` is the sub-box on which
/// every coefficient is exact despite the truncation.
class Laurent2 {
 public:
  using Coeffs = std::map<std::pair<long, long>, Rational>;

  /// Throws WindowError for an empty window or t < 1.
  Laurent2(int t, Window window);

  /// x1^{-1} delta(x2/x1) (x2/x1)^{k/t} = sum_n x2^{n+k/t} x1^{-n-1-k/t}.
  static Laurent2 delta(int t, Window window, long k = 0);

  int t() const { return t_; }
  const Window& window() const { return window_; }
  const Window& interior() const { return interior_; }
  const Coeffs& coeffs() const { return coeffs_; }
  bool truncated() const { return truncated_; }
  Rational coefficient(long e1, long e2) const;

  /// d/dx2. Throws WindowError when the exact interior becomes empty.
  Laurent2 d_x2() const;
  /// Multiplication by (x1 - x2). Throws WindowError when the exact interior becomes empty.
  Laurent2 times_x1_minus_x2() const;
  /// Terms inside the interior only.
  Laurent2 restricted_to_interior() const;
  bool is_zero() const { return coeffs_.empty(); }

  /// e.g. "x1^-1*x2^0 + x1^-2*x2^1", exponents as rationals.
  std::string str() const;

 private:
  void add(long e1, long e2, const Rational& c);

  int t_;
  Window window_;
  Window interior_;
  Coeffs coeffs_;
  bool truncated_ = false;
};

struct DeltaReport {
  long m = 0, n = 0;
  Laurent2 residual;  // restricted to the exact interior
  bool holds_in_window = false;
};

/// (x1 - x2)^m (d/dx2)^n x1^{-1} delta(x2/x1), checked for vanishing on the
/// exact interior.
DeltaReport delta_identity_check(long m, long n, const Window& window, int t = 1, long k = 0);

/// Modes of Y(Df, x) with Df = f_(-2)|0>, computed by the iterate formula and
/// by the derivative rule (Df)_(p) = -p f_(p-1), compared on v for |p| <= max_mode.
bool derivative_property_check(const Module& vacuum, FieldId f, const ModuleVector& v, long max_mode);

}  // namespace thv
