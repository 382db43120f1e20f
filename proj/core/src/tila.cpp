#include "qsh/tila.hpp"

#include <stdexcept>

namespace qsh {

bool TauElement::symmetric() const {
  for (const Quat& q : C)
    if (!q.is_zero()) return false;
  return true;
}

static void validate_tau(const TauElement& tau, const SkewForm& form) {
  if (tau.n != form.n()) throw std::invalid_argument("tau does not match form dimension");
  if (!tau.a.is_imaginary()) throw std::invalid_argument("tau.a must lie in sp(1)");
  if (tau.A.rows() != tau.n || tau.A.cols() != tau.n)
    throw std::invalid_argument("tau.A has wrong shape");
  const QMat& jj = form.matrix();
  if (!(conj_transpose(tau.A) * jj + jj * tau.A).is_zero())
    throw std::invalid_argument("tau.A is not in so*(2n) for the chosen form");
  if (!tau.C.empty() && static_cast<int>(tau.C.size()) != tau.n)
    throw std::invalid_argument("tau.C has wrong length");
}

QMat assemble_tau(const TauElement& tau, const SkewForm& form) {
  validate_tau(tau, form);
  AmbientElement e;
  e.n = tau.n;
  e.a = tau.a;
  e.d = tau.d;
  e.c = 1;
  e.A = tau.A;
  e.X = qvec_zero(tau.n);
  e.Y = tau.C.empty() ? qvec_zero(tau.n) : tau.C;
  return assemble(e, form);
}

static QVec symtest_residual(const TauElement& tau, const QVec& x) {
  int n = tau.n;
  QVec ax = mat_qvec(tau.A, x);
  QVec aax = mat_qvec(tau.A, ax);
  QVec r(static_cast<size_t>(n));
  Quat a2 = tau.a * tau.a;
  for (int i = 0; i < n; ++i) {
    const Quat& xi = x[static_cast<size_t>(i)];
    r[static_cast<size_t>(i)] =
        xi * Quat::scalar(tau.d) + Rational(2) * (ax[static_cast<size_t>(i)] * tau.a) -
        xi * a2 - aax[static_cast<size_t>(i)];
  }
  return r;
}

SymtestReport symtest(const TauElement& tau) {
  if (!tau.a.is_imaginary()) throw std::invalid_argument("tau.a must lie in sp(1)");
  SymtestReport rep;
  rep.pass = true;
  std::vector<QVec> basis = hbasis(tau.n);
  for (size_t i = 0; i < basis.size(); ++i) {
    QVec r = symtest_residual(tau, basis[i]);
    bool zero = true;
    for (const Quat& q : r)
      if (!q.is_zero()) zero = false;
    if (!zero) {
      rep.pass = false;
      rep.residuals.emplace_back(static_cast<int>(i), std::move(r));
    }
  }
  return rep;
}

QMat lift_complement(const TauElement& tau, const SkewForm& form, const QVec& x) {
  validate_tau(tau, form);
  QVec ax = mat_qvec(tau.A, x);
  QVec f(static_cast<size_t>(tau.n));
  for (int i = 0; i < tau.n; ++i)
    f[static_cast<size_t>(i)] = ax[static_cast<size_t>(i)] - x[static_cast<size_t>(i)] * tau.a;
  AmbientElement e;
  e.n = tau.n;
  e.X = x;
  e.Y = f;
  e.A = QMat(tau.n, tau.n);
  return assemble(e, form);
}

std::vector<QMat> build_m(const TauElement& tau, const SkewForm& form) {
  if (!symtest(tau).pass) throw std::invalid_argument("symtest failed");
  std::vector<QMat> out;
  for (const QVec& x : hbasis(tau.n)) out.push_back(lift_complement(tau, form, x));
  return out;
}

BracketFn ambient_bracket(int n) {
  int size = n + 2;
  return [size](const RatVec& u, const RatVec& v) {
    return realify(commutator(unrealify(u, size, size), unrealify(v, size, size)));
  };
}

static RatVec flatten(const RatMat& m) { return m.a; }

static RatMat m_block_of_ad(const LiePresentation& g, int idx, int dim_m) {
  RatMat out(dim_m, dim_m);
  for (int j = 0; j < dim_m; ++j)
    for (int k = 0; k < dim_m; ++k)
      out.at(k, j) = g.c[static_cast<size_t>(idx)][static_cast<size_t>(j)][static_cast<size_t>(k)];
  return out;
}

Tila build_tila(const TauElement& tau, const SkewForm& form) {
  if (!symtest(tau).pass) throw std::invalid_argument("symtest failed");
  int n = tau.n;
  int coord_dim = ambient_coord_dim(n);
  BracketFn bracket = ambient_bracket(n);

  std::vector<QMat> m_mats = build_m(tau, form);
  QMat tau_mat = assemble_tau(tau, form);
  RatVec tau_vec = realify(tau_mat);

  // every lifted element centralizes tau
  for (const QMat& m : m_mats)
    if (!commutator(m, tau_mat).is_zero()) throw std::logic_error("quotient ill-defined");

  Subspace m_span(coord_dim);
  for (const QMat& m : m_mats) m_span.insert(realify(m));

  // l = span of pairwise brackets of the m basis
  Subspace l_span(coord_dim);
  std::vector<RatVec> l_gens;
  for (size_t i = 0; i < m_mats.size(); ++i)
    for (size_t j = i + 1; j < m_mats.size(); ++j) {
      RatVec w = realify(commutator(m_mats[i], m_mats[j]));
      if (l_span.insert(w)) l_gens.push_back(std::move(w));
    }
  // closure under further bracketing follows from the grading; assert it
  for (const RatVec& u : l_gens)
    for (const RatVec& v : l_gens)
      if (!l_span.contains(bracket(u, v))) throw std::logic_error("grading violated");
  // [[m,m],m] subset m
  for (const RatVec& u : l_gens)
    for (const QMat& m : m_mats)
      if (!m_span.contains(bracket(u, realify(m)))) throw std::logic_error("grading violated");
  // [l, tau] = 0
  for (const RatVec& u : l_gens)
    if (!is_zero(bracket(u, tau_vec))) throw std::logic_error("quotient ill-defined");

  Subspace s = m_span.sum(l_span);
  bool tau_in = s.contains(tau_vec);
  Subspace t_line(coord_dim);
  if (tau_in) t_line.insert(tau_vec);

  // complement: the m basis, then l rows independent of (tau, m)
  Subspace acc = t_line;
  std::vector<RatVec> complement;
  std::vector<QMat> ambient_basis;
  for (const QMat& m : m_mats) {
    RatVec v = realify(m);
    acc.insert(v);
    complement.push_back(std::move(v));
    ambient_basis.push_back(m);
  }
  for (const RatVec& row : l_span.basis())
    if (acc.insert(row)) {
      complement.push_back(row);
      ambient_basis.push_back(unrealify(row, n + 2, n + 2));
    }

  Tila t{form, tau};
  t.g = presentation_with_complement(s, t_line, complement, bracket);
  t.dim_m = static_cast<int>(m_mats.size());
  t.dim_l = t.g.dim - t.dim_m;
  t.tau_in_span = tau_in;
  t.ambient_span = s;
  t.t_line = t_line;
  t.ambient_basis = std::move(ambient_basis);

  t.g.labels.resize(static_cast<size_t>(t.g.dim));
  for (int i = 0; i < t.dim_m; ++i) t.g.labels[static_cast<size_t>(i)] = "m" + std::to_string(i);
  for (int i = 0; i < t.dim_l; ++i)
    t.g.labels[static_cast<size_t>(t.dim_m + i)] = "l" + std::to_string(i);

  t.sigma.assign(static_cast<size_t>(t.g.dim), 1);
  for (int i = 0; i < t.dim_m; ++i) t.sigma[static_cast<size_t>(i)] = -1;

  std::vector<RatVec> m_unit, l_unit;
  for (int i = 0; i < t.g.dim; ++i) {
    RatVec v(static_cast<size_t>(t.g.dim));
    v[static_cast<size_t>(i)] = 1;
    if (i < t.dim_m)
      m_unit.push_back(std::move(v));
    else
      l_unit.push_back(std::move(v));
  }
  t.m_coords = Subspace::span(t.g.dim, m_unit);
  t.l_coords = Subspace::span(t.g.dim, l_unit);

  // Q0: right multiplication by the conjugated units, moved through the
  // parametrization m = H^n
  std::vector<QVec> params = hbasis(n);
  const Quat units[3] = {kI, kJ, kK};
  for (int a = 0; a < 3; ++a) {
    RatMat ja(t.dim_m, t.dim_m);
    for (int col = 0; col < t.dim_m; ++col) {
      RatVec image = realify(qvec_right_mul(params[static_cast<size_t>(col)], -units[a]));
      for (int row = 0; row < t.dim_m; ++row) ja.at(row, col) = image[static_cast<size_t>(row)];
    }
    t.q0[static_cast<size_t>(a)] = std::move(ja);
  }

  t.omega0 = RatMat(t.dim_m, t.dim_m);
  for (int i = 0; i < t.dim_m; ++i)
    for (int j = 0; j < t.dim_m; ++j)
      t.omega0.at(i, j) = levi_form(params[static_cast<size_t>(i)], params[static_cast<size_t>(j)], form);

  t.report = verify_axioms(t);
  return t;
}

AxiomReport verify_axioms(const Tila& t) {
  AxiomReport rep;
  const LiePresentation& g = t.g;
  const int dm = t.dim_m;
  const int dim = g.dim;

  rep.sigma_automorphism = true;
  for (int i = 0; i < dim && rep.sigma_automorphism; ++i)
    for (int j = 0; j < dim && rep.sigma_automorphism; ++j)
      for (int k = 0; k < dim; ++k)
        if (g.c[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] != 0 &&
            t.sigma[static_cast<size_t>(i)] * t.sigma[static_cast<size_t>(j)] !=
                t.sigma[static_cast<size_t>(k)]) {
          rep.sigma_automorphism = false;
          break;
        }

  Subspace mm(dim);
  for (int i = 0; i < dm; ++i)
    for (int j = i + 1; j < dm; ++j)
      mm.insert(g.c[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  rep.l_equals_bracket_mm = (mm == t.l_coords);

  rep.no_ideal_in_l = (max_ideal_in(g, t.l_coords).dim() == 0);

  const RatMat& j1 = t.q0[0];
  const RatMat& j2 = t.q0[1];
  const RatMat& j3 = t.q0[2];
  RatMat id = RatMat::identity(dm);
  RatMat neg_id = Rational(-1) * id;
  rep.quaternion_relations = (j1 * j1 == neg_id) && (j2 * j2 == neg_id) && (j3 * j3 == neg_id) &&
                             (j1 * j2 == j3) && (j2 * j1 == Rational(-1) * j3);

  // l acts on Q0 preserving its span
  Subspace q0span(dm * dm);
  for (const RatMat& j : t.q0) q0span.insert(j.a);
  rep.q0_l_invariant = true;
  std::vector<RatMat> rho;
  for (int li = 0; li < t.dim_l; ++li) rho.push_back(m_block_of_ad(g, dm + li, dm));
  for (const RatMat& r : rho)
    for (const RatMat& j : t.q0)
      if (!q0span.contains((r * j - j * r).a)) rep.q0_l_invariant = false;

  rep.omega_skew = (transpose(t.omega0) == Rational(-1) * t.omega0);
  rep.omega_nondegenerate = (rank(t.omega0) == dm);
  rep.omega_hermitian = true;
  for (const RatMat& j : t.q0)
    if (!(transpose(j) * t.omega0 * j == t.omega0)) rep.omega_hermitian = false;

  rep.omega_l_invariant = true;
  for (const RatMat& r : rho)
    if (!(transpose(r) * t.omega0 + t.omega0 * r).is_zero()) rep.omega_l_invariant = false;

  // Chevalley-Eilenberg 2-cocycle for the extension with l . omega0 = 0:
  // omega([x,y],z) + omega([y,z],x) + omega([z,x],y) = 0 on basis triples
  auto pair_m = [&](const RatVec& v, int unit_idx) {
    if (unit_idx >= dm) return Rational(0);
    Rational s = 0;
    for (int r = 0; r < dm; ++r)
      if (v[static_cast<size_t>(r)] != 0) s += v[static_cast<size_t>(r)] * t.omega0.at(r, unit_idx);
    return s;
  };
  rep.omega_cocycle = true;
  for (int i = 0; i < dim && rep.omega_cocycle; ++i)
    for (int j = i + 1; j < dim && rep.omega_cocycle; ++j)
      for (int k = j + 1; k < dim; ++k) {
        Rational s = pair_m(g.c[static_cast<size_t>(i)][static_cast<size_t>(j)], k) +
                     pair_m(g.c[static_cast<size_t>(j)][static_cast<size_t>(k)], i) +
                     pair_m(g.c[static_cast<size_t>(k)][static_cast<size_t>(i)], j);
        if (s != 0) {
          rep.omega_cocycle = false;
          break;
        }
      }
  return rep;
}

TraceFormReport ambient_trace_form_on_m(const Tila& t) {
  TraceFormReport rep;
  const int dm = t.dim_m;
  rep.gram = RatMat(dm, dm);
  for (int i = 0; i < dm; ++i)
    for (int j = i; j < dm; ++j) {
      Rational v = real_trace(t.ambient_basis[static_cast<size_t>(i)] *
                              t.ambient_basis[static_cast<size_t>(j)]);
      rep.gram.at(i, j) = v;
      rep.gram.at(j, i) = v;
    }
  rep.rank = rank(rep.gram);
  rep.degenerate = rep.rank < dm;
  return rep;
}

Rational trace_form_expansion(const TauElement& tau, const SkewForm& form, const QVec& x,
                              const QVec& y) {
  int n = tau.n;
  const QMat& jj = form.matrix();
  auto f = [&](const QVec& v) {
    QVec av = mat_qvec(tau.A, v);
    QVec out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      out[static_cast<size_t>(i)] = av[static_cast<size_t>(i)] - v[static_cast<size_t>(i)] * tau.a;
    return out;
  };
  QVec fx = f(x), fy = f(y);
  auto col = [&](const QVec& v) {
    QMat m(n, 1);
    for (int i = 0; i < n; ++i) m.at(i, 0) = v[static_cast<size_t>(i)];
    return m;
  };
  QMat xc = col(x), yc = col(y), fxc = col(fx), fyc = col(fy);
  // 4 Re((AX-Xa)* jj Y - X* jj (AY-Ya)) + tr_R(X (AY-Ya)* jj - (AX-Xa) Y* jj)
  QMat scalar_part = conj_transpose(fxc) * jj * yc - conj_transpose(xc) * jj * fyc;  // 1x1
  QMat mat_part = xc * (conj_transpose(fyc) * jj) - fxc * (conj_transpose(yc) * jj);  // n x n
  return 4 * scalar_part.at(0, 0).w + real_trace(mat_part);
}

CentralElementReport central_element_analysis(const Tila& t) {
  CentralElementReport rep;
  const int dm = t.dim_m;
  RatMat b = killing_form(t.g);
  RatMat bm(dm, dm);
  for (int i = 0; i < dm; ++i)
    for (int j = 0; j < dm; ++j) bm.at(i, j) = b.at(i, j);
  if (rank(bm) < dm) {
    rep.status = CentralElementReport::Status::NotApplicable;
    return rep;
  }
  std::optional<RatMat> omega_inv = inverse(t.omega0);
  if (!omega_inv) {
    rep.status = CentralElementReport::Status::NotApplicable;
    return rep;
  }
  // B_m(X, Y) = omega0(X, I Y)  =>  B_m = omega0 . I
  rep.i_endo = *omega_inv * bm;

  std::vector<RatMat> rho;
  for (int li = 0; li < t.dim_l; ++li) rho.push_back(m_block_of_ad(t.g, dm + li, dm));
  rep.commutes_with_l = true;
  for (const RatMat& r : rho)
    if (!(r * rep.i_endo == rep.i_endo * r)) rep.commutes_with_l = false;
  rep.bm_skew = (transpose(rep.i_endo) * bm + bm * rep.i_endo).is_zero();

  // realize I as ad(Z0) with Z0 in l
  RatMat sys(dm * dm, t.dim_l);
  for (int li = 0; li < t.dim_l; ++li) {
    RatVec f = flatten(rho[static_cast<size_t>(li)]);
    for (int r = 0; r < dm * dm; ++r) sys.at(r, li) = f[static_cast<size_t>(r)];
  }
  std::optional<RatVec> z = solve(sys, flatten(rep.i_endo));
  if (!z) {
    rep.status = CentralElementReport::Status::NoAdRealization;
    return rep;
  }
  rep.z0.assign(static_cast<size_t>(t.g.dim), Rational(0));
  for (int li = 0; li < t.dim_l; ++li) rep.z0[static_cast<size_t>(dm + li)] = (*z)[static_cast<size_t>(li)];
  // Z0 must centralize l
  for (int li = 0; li < t.dim_l; ++li) {
    RatVec e(static_cast<size_t>(t.g.dim));
    e[static_cast<size_t>(dm + li)] = 1;
    if (!is_zero(t.g.bracket(rep.z0, e))) {
      rep.status = CentralElementReport::Status::NoAdRealization;
      return rep;
    }
  }
  rep.status = CentralElementReport::Status::Ok;
  return rep;
}

LeviReport levi_structure(const Tila& t, const CoordinateLabels* labels) {
  LeviReport rep;
  Subspace rad = radical(t.g);
  rep.radical_dim = rad.dim();
  rep.semisimple_dim = t.g.dim - rad.dim();
  rep.radical_abelian = (derived_subspace(t.g, rad, rad).dim() == 0);
  if (labels) {
    // ambient representatives of the radical, plus the tau line
    int coord_dim = t.ambient_span.ambient_dim();
    Subspace rad_amb(coord_dim);
    for (const RatVec& v : rad.basis()) {
      RatVec w(static_cast<size_t>(coord_dim));
      for (int g = 0; g < t.g.dim; ++g) {
        if (v[static_cast<size_t>(g)] == 0) continue;
        RatVec amb = realify(t.ambient_basis[static_cast<size_t>(g)]);
        for (int c = 0; c < coord_dim; ++c) w[static_cast<size_t>(c)] += v[static_cast<size_t>(g)] * amb[static_cast<size_t>(c)];
      }
      rad_amb.insert(std::move(w));
    }
    Subspace pre = rad_amb.sum(t.t_line);
    rep.r_qh_dim = pre.intersect(labels->qh).dim() - t.t_line.dim();
    rep.r_deg_dim = pre.intersect(labels->deg).dim();
  }
  return rep;
}

}  // namespace qsh
