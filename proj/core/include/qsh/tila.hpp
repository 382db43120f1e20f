#pragma once

#include <array>
#include <optional>
#include <string>

#include "qsh/presentation.hpp"
#include "qsh/sostar.hpp"

namespace qsh {

/// Generator of the 1-dimensional subalgebra t. With C = 0 it assembles to
///   ( a  0  d )
///   ( 0  A  0 )
///   ( 1  0  a )
/// for a in sp(1), A in so*(2n), d real; the general form carries the extra
/// column C in H^n.
struct TauElement {
  int n = 0;
  Quat a;
  QMat A;
  Rational d;
  QVec C;  // empty or all-zero in the symmetric case

  bool symmetric() const;
};

QMat assemble_tau(const TauElement& tau, const SkewForm& form);

/// Result of evaluating R(X) = Xd + 2AXa - Xa^2 - A^2X on the 4n real basis
/// vectors of H^n. R is real-linear in X, so basis evaluation is exhaustive.
struct SymtestReport {
  bool pass = false;
  std::vector<std::pair<int, QVec>> residuals;  // (basis index, nonzero residual)
};
SymtestReport symtest(const TauElement& tau);

/// The matrix X~(X) with g_-1 part X and g_1 part AX - Xa.
QMat lift_complement(const TauElement& tau, const SkewForm& form, const QVec& x);

/// The 4n lifted basis elements of the reductive complement m. Construction
/// is blocked with std::invalid_argument("symtest failed") when the matrix
/// equation does not hold.
std::vector<QMat> build_m(const TauElement& tau, const SkewForm& form);

struct AxiomReport {
  bool sigma_automorphism = false;
  bool l_equals_bracket_mm = false;
  bool no_ideal_in_l = false;
  bool quaternion_relations = false;  // Ja^2 = -id, J1 J2 = J3 = -J2 J1
  bool q0_l_invariant = false;        // [rho(l), Q0] inside span(Q0)
  bool omega_skew = false;
  bool omega_nondegenerate = false;   // rank 4n
  bool omega_hermitian = false;       // omega(Ja X, Ja Y) = omega(X, Y)
  bool omega_l_invariant = false;
  bool omega_cocycle = false;         // with the extension l . omega = 0

  bool all() const {
    return sigma_automorphism && l_equals_bracket_mm && no_ideal_in_l &&
           quaternion_relations && q0_l_invariant && omega_skew && omega_nondegenerate &&
           omega_hermitian && omega_l_invariant && omega_cocycle;
  }
};

/// Constructed algebra g = (m + [m,m]) / (span cap R tau), with basis ordered
/// m-part first, l-part second. sigma is -1 on the m block and +1 on the l
/// block; Q0 transports right multiplication by the conjugated units through
/// the parametrization; omega0 is the Levi form.
struct Tila {
  Tila(SkewForm f, TauElement t) : form(std::move(f)), tau(std::move(t)) {}

  SkewForm form;
  TauElement tau;

  LiePresentation g;
  int dim_m = 0;
  int dim_l = 0;
  std::vector<int> sigma;  // +1 / -1 per basis vector

  std::array<RatMat, 3> q0;  // J1, J2, J3 on the m block
  RatMat omega0;             // 4n x 4n

  Subspace m_coords;  // coordinate subspaces of the presentation space
  Subspace l_coords;

  // ambient data retained for the structural reports
  std::vector<QMat> ambient_basis;  // complement representatives, m then l
  Subspace ambient_span;            // S = span(m) + bracket closure of [m,m]
  Subspace t_line;                  // S cap R tau
  bool tau_in_span = false;

  AxiomReport report;
};

/// Throws std::invalid_argument("symtest failed"),
/// std::logic_error("grading violated") when [[m,m],m] is not inside m, and
/// std::logic_error("quotient ill-defined") when [S, tau] != 0.
Tila build_tila(const TauElement& tau, const SkewForm& form);

/// Re-runs every axiom check of the definitions against the stored fields.
AxiomReport verify_axioms(const Tila& t);

/// Gram matrix of real_trace(X~(X) X~(Y)) on the m basis, with exact rank.
struct TraceFormReport {
  RatMat gram;
  int rank = 0;
  bool degenerate = true;
};
TraceFormReport ambient_trace_form_on_m(const Tila& t);

/// Expanded right-hand side of the trace identity, used as a cross-check:
/// 4 Re((AX-Xa)* jj Y - X* jj (AY-Ya)) + tr_R(X (AY-Ya)* jj - (AX-Xa) Y* jj).
Rational trace_form_expansion(const TauElement& tau, const SkewForm& form,
                              const QVec& x, const QVec& y);

/// Solves B_m(X, Y) = omega0(X, I Y) for the endomorphism I of m and realizes
/// it as ad(Z0) for Z0 in the center of l.
struct CentralElementReport {
  enum class Status { Ok, NotApplicable, NoAdRealization };
  Status status = Status::NotApplicable;
  RatMat i_endo;            // on the m block
  RatVec z0;                // presentation coordinates, l block
  bool commutes_with_l = false;
  bool bm_skew = false;
};
CentralElementReport central_element_analysis(const Tila& t);

/// Radical via Cartan's criterion, semisimple complement dimension, and the
/// split of the radical into the quaternionic-Hermitian and degenerate parts
/// (the split requires the catalog's labeled coordinate blocks).
struct CoordinateLabels {
  Subspace qh;   // ambient span of the Y / H labeled blocks
  Subspace deg;  // ambient span of the Z / R labeled blocks
};
struct LeviReport {
  int semisimple_dim = 0;
  int radical_dim = 0;
  int r_qh_dim = -1;   // modulo t; -1 when no labels were supplied
  int r_deg_dim = -1;
  bool radical_abelian = false;
};
LeviReport levi_structure(const Tila& t, const CoordinateLabels* labels = nullptr);

/// Bracket function on realified (n+2) x (n+2) matrices.
BracketFn ambient_bracket(int n);

}  // namespace qsh
