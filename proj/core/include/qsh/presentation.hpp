#pragma once

#include <string>
#include <vector>

#include "qsh/subspace.hpp"

namespace qsh {

/// Finite-dimensional real Lie algebra given by exact structure constants
/// [b_i, b_j] = sum_k c[i][j][k] b_k.
struct LiePresentation {
  int dim = 0;
  std::vector<std::vector<RatVec>> c;  // c[i][j] is the coefficient vector of [b_i, b_j]
  std::vector<std::string> labels;

  RatVec bracket(const RatVec& u, const RatVec& v) const;
  /// Matrix of ad(b_i): column j holds [b_i, b_j].
  RatMat ad(int i) const;
  RatMat ad(const RatVec& v) const;

  /// Antisymmetry and the Jacobi identity, checked exactly on all triples.
  bool well_formed() const;
};

/// Structure constants of S/T for a caller-chosen complement of T in S.
/// Verifies T subset S, [S,T] subset T, and that every bracket of complement
/// representatives lies back in S. Throws std::invalid_argument with
/// "T not contained in S" / "not an ideal of S" otherwise.
LiePresentation presentation_with_complement(const Subspace& s, const Subspace& t,
                                             const std::vector<RatVec>& complement,
                                             const BracketFn& bracket);

/// Same, with the complement chosen as the rows of S at the non-pivot
/// coordinates of T inside S.
LiePresentation quotient_presentation(const Subspace& s, const Subspace& t,
                                      const BracketFn& bracket);

/// B(b_i, b_j) = trace(ad b_i . ad b_j), computed exactly.
RatMat killing_form(const LiePresentation& p);

/// [U, V] as a subspace of the presentation space.
Subspace derived_subspace(const LiePresentation& p, const Subspace& u, const Subspace& v);
Subspace whole_space(const LiePresentation& p);

/// Whether the derived series of u (a subalgebra) reaches zero.
bool is_solvable(const LiePresentation& p, const Subspace& u);

/// Solvable radical via Cartan's criterion: {x : B(x, [g,g]) = 0}.
/// The result is checked to be a solvable ideal; failure of that internal
/// consistency check throws std::logic_error("radical not solvable").
Subspace radical(const LiePresentation& p);

/// Largest ideal of the presented algebra inside L, by the fixed-point
/// iteration i <- {x in i : [g, x] subset i}.
Subspace max_ideal_in(const LiePresentation& p, const Subspace& l);

}  // namespace qsh
