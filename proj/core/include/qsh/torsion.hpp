#pragma once

#include "qsh/catalog.hpp"

namespace qsh {

/// Decomposes [tau-hat, X~(X)] in the line R tau-hat for every lifted basis
/// element. on_line reports whether every bracket stays on the line; lambda
/// holds the coefficient functional divided by 2 over the real m basis
/// (so Example 6.2 reads lambda = x4 - x1). When a bracket leaves the line,
/// off_line_index names the first offending basis vector and residual holds
/// the off-line part.
struct TorsionReport {
  bool on_line = false;
  RatVec lambda;
  int off_line_index = -1;
  QMat residual;
};
TorsionReport torsion_coefficient(const TauElement& tauhat, const SkewForm& form,
                                  const std::vector<QMat>& m_basis);

/// True iff g_1(C,X) = g_2(C,X) = g_3(C,X) = 0 for all X forces C = 0, i.e.
/// C is zero or some metric pairs nontrivially with it. For the shipped
/// forms the stacked Gram system has full rank 4n, so this always holds.
bool symmetric_forcing_check(const SkewForm& form, const QVec& c);

/// Rank of the stacked (g_1; g_2; g_3) Gram system (4n for the shipped forms).
int stacked_metric_rank(const SkewForm& form);

/// Bracket closure of the lifted complement inside so*(2n+4), modulo the
/// tau-hat line: dimension and derived-series solvability of the quotient.
struct SolvableReport {
  int dim = 0;
  bool solvable = false;
};
SolvableReport solvable_subalgebra_report(const TauElement& tauhat, const SkewForm& form,
                                          const std::vector<QMat>& m_basis);

}  // namespace qsh
