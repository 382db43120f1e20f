#include "qsh/sostar.hpp"

#include <stdexcept>

namespace qsh {

SkewForm SkewForm::skew_hermitian(int n) {
  if (n < 1) throw std::invalid_argument("skew_hermitian: n must be positive");
  QMat jj(n, n);
  for (int i = 0; i < n; ++i) jj.at(i, i) = kJ;
  return SkewForm(n, FormVariant::SkewHermitian, 0, 0, std::move(jj));
}

SkewForm SkewForm::darboux_even(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("darboux_even: n must be even");
  int h = n / 2;
  QMat jj(n, n);
  for (int i = 0; i < h; ++i) {
    jj.at(i, h + i) = kOne;
    jj.at(h + i, i) = -kOne;
  }
  return SkewForm(n, FormVariant::DarbouxEven, 0, 0, std::move(jj));
}

SkewForm SkewForm::darboux_odd(int n) {
  if (n < 1 || n % 2 != 1) throw std::invalid_argument("darboux_odd: n must be odd");
  int h = (n - 1) / 2;
  QMat jj(n, n);
  for (int i = 0; i < h; ++i) {
    jj.at(i, h + 1 + i) = kOne;
    jj.at(h + 1 + i, i) = -kOne;
  }
  jj.at(h, h) = kJ;
  return SkewForm(n, FormVariant::DarbouxOdd, 0, 0, std::move(jj));
}

SkewForm SkewForm::darboux_signed(int p, int q) {
  if (p < 0 || q < 0 || p + q < 1)
    throw std::invalid_argument("darboux_signed: need p, q >= 0 and p + q >= 1");
  int h = p + q;
  int n = 2 * h;
  QMat sig = QMat::signature(p, q);
  QMat jj(n, n);
  for (int i = 0; i < h; ++i) {
    jj.at(i, h + i) = sig.at(i, i);
    jj.at(h + i, i) = -sig.at(i, i);
  }
  return SkewForm(n, FormVariant::DarbouxSigned, p, q, std::move(jj));
}

QMat full_form_matrix(const SkewForm& form) {
  int n = form.n();
  QMat j(n + 2, n + 2);
  j.at(0, n + 1) = kOne;
  j.at(n + 1, 0) = -kOne;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) j.at(1 + r, 1 + c) = form.matrix().at(r, c);
  return j;
}

bool ambient_membership(const QMat& m, const SkewForm& form) {
  int n = form.n();
  if (m.rows() != n + 2 || m.cols() != n + 2)
    throw std::invalid_argument("ambient_membership: matrix size does not match form");
  QMat j = full_form_matrix(form);
  return (conj_transpose(m) * j + j * m).is_zero();
}

QMat assemble(const AmbientElement& e, const SkewForm& form) {
  int n = form.n();
  if (e.n != n || static_cast<int>(e.X.size()) != n || static_cast<int>(e.Y.size()) != n ||
      e.A.rows() != n || e.A.cols() != n)
    throw std::invalid_argument("assemble: block shapes do not match form");
  QMat m(n + 2, n + 2);
  m.at(0, 0) = e.a;
  m.at(n + 1, n + 1) = -conj(e.a);
  m.at(0, n + 1) = Quat::scalar(e.d);
  m.at(n + 1, 0) = Quat::scalar(e.c);
  for (int r = 0; r < n; ++r) {
    m.at(1 + r, 0) = e.X[static_cast<size_t>(r)];
    m.at(1 + r, n + 1) = e.Y[static_cast<size_t>(r)];
    for (int c = 0; c < n; ++c) m.at(1 + r, 1 + c) = e.A.at(r, c);
  }
  // row 0: Y* jj, row n+1: -X* jj
  for (int c = 0; c < n; ++c) {
    Quat sy, sx;
    for (int t = 0; t < n; ++t) {
      sy = sy + conj(e.Y[static_cast<size_t>(t)]) * form.matrix().at(t, c);
      sx = sx + conj(e.X[static_cast<size_t>(t)]) * form.matrix().at(t, c);
    }
    m.at(0, 1 + c) = sy;
    m.at(n + 1, 1 + c) = -sx;
  }
  return m;
}

AmbientElement decompose(const QMat& m, const SkewForm& form) {
  if (!ambient_membership(m, form))
    throw std::invalid_argument("decompose: matrix is not an ambient member");
  int n = form.n();
  AmbientElement e;
  e.n = n;
  e.a = m.at(0, 0);
  e.d = m.at(0, n + 1).w;
  e.c = m.at(n + 1, 0).w;
  e.X = qvec_zero(n);
  e.Y = qvec_zero(n);
  e.A = QMat(n, n);
  for (int r = 0; r < n; ++r) {
    e.X[static_cast<size_t>(r)] = m.at(1 + r, 0);
    e.Y[static_cast<size_t>(r)] = m.at(1 + r, n + 1);
    for (int c = 0; c < n; ++c) e.A.at(r, c) = m.at(1 + r, 1 + c);
  }
  return e;
}

GradedParts grade_project(const QMat& m, const SkewForm& form) {
  AmbientElement e = decompose(m, form);
  int n = form.n();
  AmbientElement part;
  part.n = n;
  part.A = QMat(n, n);
  part.X = qvec_zero(n);
  part.Y = qvec_zero(n);

  GradedParts out;
  AmbientElement pm2 = part;
  pm2.c = e.c;
  out.g_m2 = assemble(pm2, form);
  AmbientElement pm1 = part;
  pm1.X = e.X;
  out.g_m1 = assemble(pm1, form);
  AmbientElement p0 = part;
  p0.a = e.a;
  p0.A = e.A;
  out.g_0 = assemble(p0, form);
  AmbientElement p1 = part;
  p1.Y = e.Y;
  out.g_1 = assemble(p1, form);
  AmbientElement p2 = part;
  p2.d = e.d;
  out.g_2 = assemble(p2, form);
  return out;
}

QMat sl2_e(const SkewForm& form) {
  int n = form.n();
  QMat m(n + 2, n + 2);
  m.at(0, n + 1) = kOne;
  return m;
}

QMat sl2_f(const SkewForm& form) {
  int n = form.n();
  QMat m(n + 2, n + 2);
  m.at(n + 1, 0) = kOne;
  return m;
}

QMat sl2_h(const SkewForm& form) {
  int n = form.n();
  QMat m(n + 2, n + 2);
  m.at(0, 0) = kOne;
  m.at(n + 1, n + 1) = -kOne;
  return m;
}

QMat embed_g_minus1(const QVec& x, const SkewForm& form) {
  int n = form.n();
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("embed_g_minus1: vector size does not match form");
  AmbientElement e;
  e.n = n;
  e.X = x;
  e.Y = qvec_zero(n);
  e.A = QMat(n, n);
  return assemble(e, form);
}

Rational levi_form(const QVec& x, const QVec& y, const SkewForm& form) {
  int n = form.n();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw std::invalid_argument("levi_form: vector size does not match form");
  // 2 Re(Y* jj X), the (n+2, 1) entry of [embed(X), embed(Y)]
  Quat s;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      s = s + conj(y[static_cast<size_t>(r)]) * form.matrix().at(r, c) * x[static_cast<size_t>(c)];
  return 2 * s.w;
}

RatMat levi_gram(const SkewForm& form) {
  std::vector<QVec> basis = hbasis(form.n());
  int d = static_cast<int>(basis.size());
  RatMat g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      g.at(i, j) = levi_form(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)], form);
  return g;
}

std::array<Rational, 3> pseudo_hermitian_metrics(const QVec& c, const QVec& x,
                                                 const SkewForm& form) {
  int n = form.n();
  if (static_cast<int>(c.size()) != n || static_cast<int>(x.size()) != n)
    throw std::invalid_argument("pseudo_hermitian_metrics: vector size does not match form");
  Quat s;
  for (int r = 0; r < n; ++r)
    for (int t = 0; t < n; ++t) {
      s = s + conj(c[static_cast<size_t>(r)]) * form.matrix().at(r, t) * x[static_cast<size_t>(t)];
      s = s + conj(x[static_cast<size_t>(r)]) * form.matrix().at(r, t) * c[static_cast<size_t>(t)];
    }
  Rational half(1, 2);
  return {half * s.x, half * s.y, half * s.z};
}

RatMat pseudo_hermitian_gram(const SkewForm& form, int a) {
  if (a < 0 || a > 2) throw std::invalid_argument("metric index out of range");
  std::vector<QVec> basis = hbasis(form.n());
  int d = static_cast<int>(basis.size());
  RatMat g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      g.at(i, j) = pseudo_hermitian_metrics(basis[static_cast<size_t>(i)],
                                            basis[static_cast<size_t>(j)], form)[static_cast<size_t>(a)];
  return g;
}

int so_star_dim(int n) { return n * (2 * n - 1); }

int ambient_dim(int n) { return 2 * (n + 2) * (n + 2) - (n + 2); }

int ambient_coord_dim(int n) { return 4 * (n + 2) * (n + 2); }

}  // namespace qsh
