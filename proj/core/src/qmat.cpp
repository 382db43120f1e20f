#include "qsh/qmat.hpp"

#include <stdexcept>

namespace qsh {

QMat::QMat(int rows, int cols)
    : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
}

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = kOne;
  return m;
}

QMat QMat::signature(int p, int q) {
  QMat m(p + q, p + q);
  for (int i = 0; i < p; ++i) m.at(i, i) = kOne;
  for (int i = 0; i < q; ++i) m.at(p + i, p + i) = -kOne;
  return m;
}

bool QMat::is_zero() const {
  for (const Quat& q : e_)
    if (!q.is_zero()) return false;
  return true;
}

bool QMat::operator==(const QMat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

static void require_same_shape(const QMat& m, const QMat& n) {
  if (m.rows() != n.rows() || m.cols() != n.cols())
    throw std::invalid_argument("matrix shape mismatch");
}

QMat operator+(const QMat& m, const QMat& n) {
  require_same_shape(m, n);
  QMat out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.at(r, c) = m.at(r, c) + n.at(r, c);
  return out;
}

QMat operator-(const QMat& m, const QMat& n) {
  require_same_shape(m, n);
  QMat out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.at(r, c) = m.at(r, c) - n.at(r, c);
  return out;
}

QMat operator-(const QMat& m) {
  QMat out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.at(r, c) = -m.at(r, c);
  return out;
}

QMat operator*(const QMat& m, const QMat& n) {
  if (m.cols() != n.rows()) throw std::invalid_argument("matrix product shape mismatch");
  QMat out(m.rows(), n.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int k = 0; k < m.cols(); ++k) {
      const Quat& mrk = m.at(r, k);
      if (mrk.is_zero()) continue;
      for (int c = 0; c < n.cols(); ++c) {
        if (n.at(k, c).is_zero()) continue;
        out.at(r, c) = out.at(r, c) + mrk * n.at(k, c);
      }
    }
  return out;
}

QMat operator*(const Rational& s, const QMat& m) {
  QMat out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.at(r, c) = s * m.at(r, c);
  return out;
}

QMat left_mul(const Quat& q, const QMat& m) {
  QMat out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.at(r, c) = q * m.at(r, c);
  return out;
}

QMat right_mul(const QMat& m, const Quat& q) {
  QMat out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.at(r, c) = m.at(r, c) * q;
  return out;
}

QMat conj_transpose(const QMat& m) {
  QMat out(m.cols(), m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.at(c, r) = conj(m.at(r, c));
  return out;
}

QMat commutator(const QMat& m, const QMat& n) {
  if (m.rows() != m.cols() || n.rows() != n.cols() || m.rows() != n.rows())
    throw std::invalid_argument("commutator needs square matrices of equal size");
  return m * n - n * m;
}

Rational real_trace(const QMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("real_trace needs a square matrix");
  Rational s = 0;
  for (int i = 0; i < m.rows(); ++i) s += m.at(i, i).w;
  return 4 * s;
}

RatVec realify(const QMat& m) {
  RatVec v;
  v.reserve(static_cast<size_t>(m.rows()) * m.cols() * 4);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      const Quat& q = m.at(r, c);
      v.push_back(q.w);
      v.push_back(q.x);
      v.push_back(q.y);
      v.push_back(q.z);
    }
  return v;
}

QMat unrealify(const RatVec& v, int rows, int cols) {
  if (v.size() != static_cast<size_t>(rows) * cols * 4)
    throw std::invalid_argument("realified length does not match shape");
  QMat m(rows, cols);
  size_t idx = 0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      m.at(r, c) = Quat(v[idx], v[idx + 1], v[idx + 2], v[idx + 3]);
      idx += 4;
    }
  return m;
}

QVec qvec_zero(int n) { return QVec(static_cast<size_t>(n)); }

std::vector<QVec> hbasis(int n) {
  std::vector<QVec> out;
  out.reserve(static_cast<size_t>(4) * n);
  for (int s = 0; s < n; ++s)
    for (int axis = 0; axis < 4; ++axis) {
      QVec v = qvec_zero(n);
      v[s] = Quat::unit(axis);
      out.push_back(std::move(v));
    }
  return out;
}

RatVec realify(const QVec& v) {
  RatVec out;
  out.reserve(v.size() * 4);
  for (const Quat& q : v) {
    out.push_back(q.w);
    out.push_back(q.x);
    out.push_back(q.y);
    out.push_back(q.z);
  }
  return out;
}

QVec unrealify_vec(const RatVec& v, int n) {
  if (v.size() != static_cast<size_t>(n) * 4)
    throw std::invalid_argument("realified length does not match vector size");
  QVec out(static_cast<size_t>(n));
  for (int s = 0; s < n; ++s)
    out[s] = Quat(v[4 * s], v[4 * s + 1], v[4 * s + 2], v[4 * s + 3]);
  return out;
}

QVec mat_qvec(const QMat& m, const QVec& v) {
  if (m.cols() != static_cast<int>(v.size()))
    throw std::invalid_argument("matrix-vector shape mismatch");
  QVec out(static_cast<size_t>(m.rows()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out[r] = out[r] + m.at(r, c) * v[c];
  return out;
}

QVec qvec_right_mul(const QVec& v, const Quat& q) {
  QVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] * q;
  return out;
}

}  // namespace qsh
