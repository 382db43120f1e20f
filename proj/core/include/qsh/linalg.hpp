#pragma once

#include <optional>
#include <vector>

#include "qsh/rational.hpp"

namespace qsh {

/// Dense rational matrix, row-major.
struct RatMat {
  int rows = 0;
  int cols = 0;
  RatVec a;

  RatMat() = default;
  RatMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Rational& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rational& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static RatMat identity(int n);
  bool is_zero() const;
  bool operator==(const RatMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

RatMat operator+(const RatMat& m, const RatMat& n);
RatMat operator-(const RatMat& m, const RatMat& n);
RatMat operator*(const RatMat& m, const RatMat& n);
RatMat operator*(const Rational& s, const RatMat& m);
RatMat transpose(const RatMat& m);
Rational trace(const RatMat& m);
RatVec mat_vec(const RatMat& m, const RatVec& v);

int rank(const RatMat& m);
/// Basis of {x : m x = 0}.
std::vector<RatVec> kernel_basis(const RatMat& m);
/// nullopt when singular.
std::optional<RatMat> inverse(const RatMat& m);
/// One solution of m x = b, nullopt when inconsistent.
std::optional<RatVec> solve(const RatMat& m, const RatVec& b);

/// Expresses vectors as exact combinations of a fixed list of linearly
/// independent generators. Elimination is factored once at construction.
class SpanSolver {
 public:
  explicit SpanSolver(const std::vector<RatVec>& generators);

  /// Coefficients c with v = sum c_i gen_i, nullopt when v is outside the span.
  std::optional<RatVec> coefficients(const RatVec& v) const;

  int ambient_dim() const { return ambient_; }
  int size() const { return ngen_; }

 private:
  int ambient_ = 0;
  int ngen_ = 0;
  // reduced rows: [span part | coefficient tracking part]
  std::vector<RatVec> rows_;
  std::vector<int> pivots_;
};

}  // namespace qsh
