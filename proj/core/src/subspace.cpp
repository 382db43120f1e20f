#include "qsh/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsh {

Subspace Subspace::span(int ambient_dim, const std::vector<RatVec>& vectors) {
  Subspace s(ambient_dim);
  for (const RatVec& v : vectors) {
    if (v.size() != static_cast<size_t>(ambient_dim))
      throw std::invalid_argument("span: vectors of mixed ambient dimension");
    s.insert(v);
  }
  return s;
}

RatVec Subspace::reduce(RatVec v) const {
  if (v.size() != static_cast<size_t>(ambient_))
    throw std::invalid_argument("vector of wrong ambient dimension");
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rational& lead = v[static_cast<size_t>(pivots_[r])];
    if (lead == 0) continue;
    Rational f = lead;
    for (size_t c = 0; c < v.size(); ++c)
      if (rows_[r][c] != 0) v[c] -= f * rows_[r][c];
  }
  return v;
}

bool Subspace::insert(RatVec v) {
  v = reduce(std::move(v));
  int pivot = -1;
  for (int c = 0; c < ambient_; ++c)
    if (v[static_cast<size_t>(c)] != 0) {
      pivot = c;
      break;
    }
  if (pivot < 0) return false;
  Rational inv = 1 / v[static_cast<size_t>(pivot)];
  for (Rational& x : v) x *= inv;
  // keep earlier rows fully reduced
  for (size_t r = 0; r < rows_.size(); ++r) {
    Rational f = rows_[r][static_cast<size_t>(pivot)];
    if (f == 0) continue;
    for (size_t c = 0; c < v.size(); ++c)
      if (v[c] != 0) rows_[r][c] -= f * v[c];
  }
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
  rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(v));
  pivots_.insert(pivots_.begin() + static_cast<long>(pos), pivot);
  return true;
}

bool Subspace::contains(const RatVec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (const RatVec& v : other.rows_)
    if (!contains(v)) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("sum: ambient mismatch");
  Subspace s = *this;
  for (const RatVec& v : other.rows_) s.insert(v);
  return s;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("intersect: ambient mismatch");
  // Zassenhaus-free route: solve for combinations of this-basis lying in other.
  // Rows of the constraint matrix: residues of this-basis modulo other.
  const int du = dim();
  if (du == 0 || other.dim() == 0) return Subspace(ambient_);
  RatMat cons(ambient_, du);
  for (int g = 0; g < du; ++g) {
    RatVec res = other.reduce(rows_[static_cast<size_t>(g)]);
    for (int i = 0; i < ambient_; ++i) cons.at(i, g) = res[static_cast<size_t>(i)];
  }
  Subspace out(ambient_);
  for (const RatVec& coeff : kernel_basis(cons)) {
    RatVec v(static_cast<size_t>(ambient_));
    for (int g = 0; g < du; ++g) {
      if (coeff[static_cast<size_t>(g)] == 0) continue;
      for (int i = 0; i < ambient_; ++i)
        v[static_cast<size_t>(i)] += coeff[static_cast<size_t>(g)] * rows_[static_cast<size_t>(g)][static_cast<size_t>(i)];
    }
    out.insert(std::move(v));
  }
  return out;
}

Subspace bracket_closure(const Subspace& s, const BracketFn& bracket) {
  Subspace out = s;
  std::vector<RatVec> all(out.basis());
  size_t frontier_start = 0;
  while (frontier_start < all.size()) {
    size_t frontier_end = all.size();
    for (size_t i = frontier_start; i < frontier_end; ++i)
      for (size_t j = 0; j < frontier_end; ++j) {
        RatVec w = bracket(all[i], all[j]);
        if (out.insert(w)) all.push_back(std::move(w));
      }
    frontier_start = frontier_end;
  }
  return out;
}

}  // namespace qsh
