#include "qsh/torsion.hpp"

#include <stdexcept>

namespace qsh {

TorsionReport torsion_coefficient(const TauElement& tauhat, const SkewForm& form,
                                  const std::vector<QMat>& m_basis) {
  QMat tau_mat = assemble_tau(tauhat, form);
  RatVec tau_vec = realify(tau_mat);
  int lead = -1;
  for (size_t i = 0; i < tau_vec.size(); ++i)
    if (tau_vec[i] != 0) {
      lead = static_cast<int>(i);
      break;
    }
  if (lead < 0) throw std::invalid_argument("tau-hat must be nonzero");

  TorsionReport rep;
  rep.on_line = true;
  for (size_t i = 0; i < m_basis.size(); ++i) {
    if (!ambient_membership(m_basis[i], form))
      throw std::invalid_argument("m basis element is not an ambient member");
    QMat br = commutator(tau_mat, m_basis[i]);
    RatVec bv = realify(br);
    Rational s = bv[static_cast<size_t>(lead)] / tau_vec[static_cast<size_t>(lead)];
    QMat residual = br - s * tau_mat;
    if (!residual.is_zero()) {
      rep.on_line = false;
      rep.off_line_index = static_cast<int>(i);
      rep.residual = residual;
      rep.lambda.clear();
      return rep;  // bracket off-line
    }
    rep.lambda.push_back(s / 2);
  }
  return rep;
}

bool symmetric_forcing_check(const SkewForm& form, const QVec& c) {
  if (static_cast<int>(c.size()) != form.n())
    throw std::invalid_argument("symmetric_forcing_check: vector size does not match form");
  bool c_zero = true;
  for (const Quat& q : c)
    if (!q.is_zero()) c_zero = false;
  if (c_zero) return true;
  for (const QVec& x : hbasis(form.n())) {
    std::array<Rational, 3> g = pseudo_hermitian_metrics(c, x, form);
    if (g[0] != 0 || g[1] != 0 || g[2] != 0) return true;
  }
  return false;  // nonzero C invisible to all three metrics
}

int stacked_metric_rank(const SkewForm& form) {
  int d = 4 * form.n();
  RatMat stacked(3 * d, d);
  for (int a = 0; a < 3; ++a) {
    RatMat g = pseudo_hermitian_gram(form, a);
    for (int r = 0; r < d; ++r)
      for (int col = 0; col < d; ++col) stacked.at(a * d + r, col) = g.at(r, col);
  }
  return rank(stacked);
}

SolvableReport solvable_subalgebra_report(const TauElement& tauhat, const SkewForm& form,
                                          const std::vector<QMat>& m_basis) {
  int n = tauhat.n;
  int coord = ambient_coord_dim(n);
  BracketFn bracket = ambient_bracket(n);
  std::vector<RatVec> gens;
  for (const QMat& m : m_basis) gens.push_back(realify(m));
  Subspace closure = bracket_closure(Subspace::span(coord, gens), bracket);

  QMat tau_mat = assemble_tau(tauhat, form);
  Subspace t_line(coord);
  t_line.insert(realify(tau_mat));
  Subspace with_t = closure.sum(t_line);

  LiePresentation p = quotient_presentation(with_t, t_line, bracket);
  SolvableReport rep;
  rep.dim = p.dim;
  rep.solvable = is_solvable(p, whole_space(p));
  return rep;
}

}  // namespace qsh
