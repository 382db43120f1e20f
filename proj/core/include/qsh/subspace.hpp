#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qsh/linalg.hpp"

namespace qsh {

/// Real-linear subspace of Q^N, canonicalized as a reduced row echelon basis.
/// Two Subspaces are equal as sets iff their basis rows compare equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient_dim) : ambient_(ambient_dim) {}

  /// Reduced basis of the linear hull. All vectors must share one ambient
  /// dimension; mixed dimensions are rejected with std::invalid_argument.
  static Subspace span(int ambient_dim, const std::vector<RatVec>& vectors);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<RatVec>& basis() const { return rows_; }

  /// Inserts a vector, returns true when the dimension grew.
  bool insert(RatVec v);
  /// Residue of v modulo the subspace (zero iff v is a member).
  RatVec reduce(RatVec v) const;
  bool contains(const RatVec& v) const;
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  bool operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && rows_ == other.rows_;
  }

 private:
  int ambient_ = 0;
  std::vector<RatVec> rows_;   // RREF rows ordered by pivot column
  std::vector<int> pivots_;
};

using BracketFn = std::function<RatVec(const RatVec&, const RatVec&)>;

/// Smallest bracket-closed subspace containing s. Terminates because the
/// dimension strictly increases each round and is bounded by the ambient.
Subspace bracket_closure(const Subspace& s, const BracketFn& bracket);

}  // namespace qsh
