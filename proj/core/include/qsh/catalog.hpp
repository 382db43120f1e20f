#pragma once

#include <string>
#include <vector>

#include "qsh/tila.hpp"

namespace qsh {

/// Classified families. NsEven / NsOdd are the non-semisimple series (the
/// p + q = 0 member is the abelian linear model); M1, M2, M3 are the simple
/// spaces SO*(2n+2)/SO*(2n)U(1), SU(2+p,q)/(SU(2)SU(p,q)U(1)) and
/// SL(n/2+1,H)/(GL(1,H)SL(n/2,H)).
enum class Family { NsEven, NsOdd, M1, M2, M3 };

struct CaseTag {
  Family family;
  int n = 0;
  int p = 0;  // unused for M1 / M3
  int q = 0;

  bool operator==(const CaseTag&) const = default;
};

/// Tag grammar: "ns-even:n,p,q", "ns-odd:n,p,q", "m1:n", "m2:n,p,q", "m3:n".
std::string format_tag(const CaseTag& tag);
/// Throws std::invalid_argument on junk or on violated parameter constraints,
/// naming the violated inequality.
CaseTag parse_tag(const std::string& s);

/// The conformally-symplectic example encodes as "torsion:n"; it is not a
/// CatalogCase (no symmetric tila behind it) and is driven by its own command.
std::string format_torsion_tag(int n);
int parse_torsion_tag(const std::string& s);

/// Expected structural data, assembled from the worked examples.
struct ExpectedReport {
  int dim_g = 0;
  int dim_m = 0;
  int dim_l = 0;
  int semisimple_dim = 0;
  int radical_dim = 0;
  int r_qh_dim = 0;   // modulo t
  int r_deg_dim = 0;
  bool ambient_degenerate = true;  // trace form on m
  bool radical_abelian = true;
  bool linear_model = false;
  std::string iso_target;  // identification of g for the simple families
};

struct CatalogCase {
  CaseTag tag;
  TauElement tau;
  SkewForm form;
  ExpectedReport expected;
  // labeled coordinate blocks for the radical split (ns families only)
  bool has_labels = false;
  CoordinateLabels labels;
};

/// Exact tau and jj of the case, entries as displayed. Parameter constraints
/// are rechecked; violations are rejected with the violated inequality.
CatalogCase make_case(const CaseTag& tag);

ExpectedReport expected_report(const CaseTag& tag);

/// All admissible tags of quaternionic dimension n.
std::vector<CaseTag> admissible_tags(int n);

/// The conformally-symplectic example: tau-hat with C != 0 and its displayed
/// lifted complement, parametrized by X1 in H and X2 in H^(n-1). Requires
/// n >= 2. jj = j I_n.
struct TorsionExample {
  TauElement tauhat;
  SkewForm form;
  std::vector<QMat> m_basis;  // 4n lifted basis elements
};
TorsionExample torsion_example(int n);

}  // namespace qsh
