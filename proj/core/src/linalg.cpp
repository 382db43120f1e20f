#include "qsh/linalg.hpp"

#include <stdexcept>

namespace qsh {

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RatMat::is_zero() const {
  for (const Rational& x : a)
    if (x != 0) return false;
  return true;
}

static void require_same_shape(const RatMat& m, const RatMat& n) {
  if (m.rows != n.rows || m.cols != n.cols)
    throw std::invalid_argument("matrix shape mismatch");
}

RatMat operator+(const RatMat& m, const RatMat& n) {
  require_same_shape(m, n);
  RatMat out(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) out.a[i] = m.a[i] + n.a[i];
  return out;
}

RatMat operator-(const RatMat& m, const RatMat& n) {
  require_same_shape(m, n);
  RatMat out(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) out.a[i] = m.a[i] - n.a[i];
  return out;
}

RatMat operator*(const RatMat& m, const RatMat& n) {
  if (m.cols != n.rows) throw std::invalid_argument("matrix product shape mismatch");
  RatMat out(m.rows, n.cols);
  for (int r = 0; r < m.rows; ++r)
    for (int k = 0; k < m.cols; ++k) {
      const Rational& mrk = m.at(r, k);
      if (mrk == 0) continue;
      for (int c = 0; c < n.cols; ++c) {
        if (n.at(k, c) == 0) continue;
        out.at(r, c) += mrk * n.at(k, c);
      }
    }
  return out;
}

RatMat operator*(const Rational& s, const RatMat& m) {
  RatMat out(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) out.a[i] = s * m.a[i];
  return out;
}

RatMat transpose(const RatMat& m) {
  RatMat out(m.cols, m.rows);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) out.at(c, r) = m.at(r, c);
  return out;
}

Rational trace(const RatMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("trace needs a square matrix");
  Rational s = 0;
  for (int i = 0; i < m.rows; ++i) s += m.at(i, i);
  return s;
}

RatVec mat_vec(const RatMat& m, const RatVec& v) {
  if (v.size() != static_cast<size_t>(m.cols))
    throw std::invalid_argument("matrix-vector shape mismatch");
  RatVec out(static_cast<size_t>(m.rows));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c)
      if (m.at(r, c) != 0 && v[c] != 0) out[r] += m.at(r, c) * v[c];
  return out;
}

// In-place row echelon; returns pivot columns.
static std::vector<int> echelon(RatMat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int pr = -1;
    for (int r = row; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(pr, c), m.at(row, c));
    Rational inv = 1 / m.at(row, col);
    for (int c = col; c < m.cols; ++c) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      Rational f = m.at(r, col);
      for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(const RatMat& m) {
  RatMat copy = m;
  return static_cast<int>(echelon(copy).size());
}

std::vector<RatVec> kernel_basis(const RatMat& m) {
  RatMat copy = m;
  std::vector<int> pivots = echelon(copy);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<RatVec> out;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec x(static_cast<size_t>(m.cols));
    x[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -copy.at(static_cast<int>(r), free);
    out.push_back(std::move(x));
  }
  return out;
}

std::optional<RatMat> inverse(const RatMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse needs a square matrix");
  int n = m.rows;
  RatMat aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  std::vector<int> pivots = echelon(aug);
  if (static_cast<int>(pivots.size()) != n || pivots[static_cast<size_t>(n) - 1] != n - 1)
    return std::nullopt;
  RatMat out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.at(r, c) = aug.at(r, n + c);
  return out;
}

std::optional<RatVec> solve(const RatMat& m, const RatVec& b) {
  if (b.size() != static_cast<size_t>(m.rows))
    throw std::invalid_argument("solve shape mismatch");
  RatMat aug(m.rows, m.cols + 1);
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols) = b[r];
  }
  std::vector<int> pivots = echelon(aug);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;  // inconsistent
  RatVec x(static_cast<size_t>(m.cols));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), m.cols);
  return x;
}

SpanSolver::SpanSolver(const std::vector<RatVec>& generators) {
  ngen_ = static_cast<int>(generators.size());
  if (ngen_ == 0) return;
  ambient_ = static_cast<int>(generators[0].size());
  for (int g = 0; g < ngen_; ++g) {
    if (generators[g].size() != static_cast<size_t>(ambient_))
      throw std::invalid_argument("generators of mixed ambient dimension");
    RatVec row(generators[g]);
    row.resize(static_cast<size_t>(ambient_ + ngen_));
    row[static_cast<size_t>(ambient_ + g)] = 1;
    // eliminate against accepted rows
    for (size_t r = 0; r < rows_.size(); ++r) {
      const Rational& lead = row[static_cast<size_t>(pivots_[r])];
      if (lead == 0) continue;
      Rational f = lead;
      for (size_t c = 0; c < row.size(); ++c)
        if (rows_[r][c] != 0) row[c] -= f * rows_[r][c];
    }
    int pivot = -1;
    for (int c = 0; c < ambient_; ++c)
      if (row[static_cast<size_t>(c)] != 0) {
        pivot = c;
        break;
      }
    if (pivot < 0) throw std::invalid_argument("generators are linearly dependent");
    Rational inv = 1 / row[static_cast<size_t>(pivot)];
    for (Rational& x : row) x *= inv;
    rows_.push_back(std::move(row));
    pivots_.push_back(pivot);
  }
}

std::optional<RatVec> SpanSolver::coefficients(const RatVec& v) const {
  if (v.size() != static_cast<size_t>(ambient_))
    throw std::invalid_argument("vector of wrong ambient dimension");
  RatVec work(v);
  work.resize(static_cast<size_t>(ambient_ + ngen_));
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rational& lead = work[static_cast<size_t>(pivots_[r])];
    if (lead == 0) continue;
    Rational f = lead;
    for (size_t c = 0; c < work.size(); ++c)
      if (rows_[r][c] != 0) work[c] -= f * rows_[r][c];
  }
  for (int c = 0; c < ambient_; ++c)
    if (work[static_cast<size_t>(c)] != 0) return std::nullopt;
  RatVec coeff(static_cast<size_t>(ngen_));
  // residual = v - sum c_g gen_g was driven to zero, tracking part holds -c
  for (int g = 0; g < ngen_; ++g) coeff[g] = -work[static_cast<size_t>(ambient_ + g)];
  return coeff;
}

}  // namespace qsh
