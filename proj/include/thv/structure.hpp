#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "thv/fields.hpp"
#include "thv/linalg.hpp"
#include "thv/modules.hpp"

namespace thv {

// Automorphisms of the vacuum module fixing omega and scaling I by a.

enum class AutCase { Trivial, Z2, Cx };
std::string_view aut_case_name(AutCase c);

struct AutConstraint {
  std::string relation;  // the vector whose image is compared, e.g. "L[1]I[-1]|0>"
  ParamPoly constraint;  // monic polynomial in a and the l's that must vanish
};

struct AutReport {
  Rational l2, l3;
  AutCase label = AutCase::Trivial;
  std::vector<AutConstraint> trace;  // symbolic in a, l2, l3
  ParamPoly solution_gcd;            // gcd in a after substituting (l2, l3)
};

AutReport automorphism_group(const Rational& l2, const Rational& l3);

/// Pairing of raising words against the PBW basis at one level of a twisted
/// Verma module: entry (i, j) is the coefficient of |0> in rows[i] . columns[j]|0>.
///
/// Row labels reuse PBWMonomial: i_part k stands for I[k - 1 + 1/t], l_part m
/// for L[m]; the word acts with the I-modes first (i_part order), then the
/// L-modes. For t = 2 the rows are the images of the columns under
/// L[n] -> L[-n], I[r] -> I[-r], so the matrix is square and symmetric.
struct GramMatrix {
  Rational level;
  std::vector<PBWMonomial> rows;
  std::vector<PBWMonomial> columns;
  std::vector<std::vector<ParamPoly>> entries;
  bool square() const { return rows.size() == columns.size(); }
};

/// The raising word of a row label, in acting order reversed (leftmost acts last).
std::vector<Generator> raising_word(const PBWMonomial& label, const AlgebraDescriptor& alg);
/// Raising-word labels lowering the level by exactly `level`, ascending.
std::vector<PBWMonomial> raising_words_at_level(const AlgebraDescriptor& alg, const Rational& level);

/// Throws std::domain_error unless level > 0 lies on (1/t)Z, and
/// std::invalid_argument for a vacuum module.
GramMatrix gram_matrix(const Module& verma, const Rational& level);

/// Evaluates every entry; throws RequiresConcreteParams if any is symbolic.
RationalMatrix evaluate(const GramMatrix& g);

/// Raising generators whose joint kernel defines singular vectors:
/// L[1], L[2], I[1/t], I[1 + 1/t].
std::vector<Generator> singular_test_generators(const AlgebraDescriptor& alg);

/// Basis of the vectors at `level` killed by every singular test generator.
/// Requires concrete parameters.
std::vector<ModuleVector> singular_vectors(const Module& verma, const Rational& level);

struct CharacterRow {
  Rational level;
  std::size_t verma_dim = 0;
  std::size_t irr_dim = 0;
  std::size_t nullity = 0;
};

/// (level, dim) of the Verma module for every lattice level up to max_level.
std::vector<CharacterRow> verma_character(const Module& mod, const Rational& max_level);
/// Adds the irreducible-quotient dimension (Gram rank) and nullity.
/// Throws RequiresConcreteParams for symbolic parameters.
std::vector<CharacterRow> irreducible_character(const Module& verma, const Rational& max_level);

struct ConformalReport {
  Rational l1, l2, l3;
  Rational central_charge;  // l1 - 1 + 12 l2^2 / l3
  long max_mode = 0;
  Rational max_level;
  std::size_t vectors = 0;
  std::size_t commute_checks = 0, commute_failures = 0;
  std::size_t virasoro_checks = 0, virasoro_failures = 0;
  std::vector<std::string> failures;  // first few, for diagnostics
  bool ok() const { return commute_failures == 0 && virasoro_failures == 0; }
};

/// omega_H = 1/(2 l3) I[-1]I[-1]|0> + l2/l3 I[-2]|0>.
ModuleVector heisenberg_conformal_vector(const Module& vacuum);

/// Splits L_n = L^H_n + L~_n with L^H_n = (omega_H)_(n+1) and checks, on all
/// basis vectors up to max_level and |m|, |n| <= max_mode, that L~ commutes
/// with L^H and satisfies the Virasoro relations at the expected central
/// charge. Throws std::domain_error when l3 = 0.
ConformalReport conformal_decomposition_check(const Rational& l1, const Rational& l2, const Rational& l3,
                                              const Rational& max_level, long max_mode = 3);

}  // namespace thv
