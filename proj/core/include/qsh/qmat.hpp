#pragma once

#include <vector>

#include "qsh/quat.hpp"

namespace qsh {

/// Vector over the quaternions.
using QVec = std::vector<Quat>;

/// Quaternionic matrix with exact rational entries, row-major.
class QMat {
 public:
  QMat() = default;
  QMat(int rows, int cols);

  static QMat identity(int n);
  /// diag(1 x p, -1 x q), size p+q.
  static QMat signature(int p, int q);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Quat& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
  const Quat& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

  bool is_zero() const;
  bool operator==(const QMat& o) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Quat> e_;
};

QMat operator+(const QMat& m, const QMat& n);
QMat operator-(const QMat& m, const QMat& n);
QMat operator-(const QMat& m);
QMat operator*(const QMat& m, const QMat& n);
QMat operator*(const Rational& s, const QMat& m);

/// q M (quaternion scalars do not commute with entries; side matters).
QMat left_mul(const Quat& q, const QMat& m);
/// M q.
QMat right_mul(const QMat& m, const Quat& q);

QMat conj_transpose(const QMat& m);
/// MN - NM. Throws std::invalid_argument unless both are square of equal size.
QMat commutator(const QMat& m, const QMat& n);
/// Trace of M acting as a real-linear map: 4 Re(sum of diagonal entries).
/// Throws std::invalid_argument on non-square input.
Rational real_trace(const QMat& m);

/// Rational coordinates of length 4*rows*cols: entries in row-major order,
/// each expanded over the ordered basis (1, i, j, k).
RatVec realify(const QMat& m);
QMat unrealify(const RatVec& v, int rows, int cols);

QVec qvec_zero(int n);
/// Real basis of H^n in realify order: (e_s q) for s = 0..n-1, q in (1,i,j,k).
std::vector<QVec> hbasis(int n);
RatVec realify(const QVec& v);
QVec unrealify_vec(const RatVec& v, int n);
QVec mat_qvec(const QMat& m, const QVec& v);
QVec qvec_right_mul(const QVec& v, const Quat& q);

}  // namespace qsh
