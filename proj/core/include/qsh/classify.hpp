#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsh/catalog.hpp"

namespace qsh {

/// Jordan-type normal-form blocks for A in so*(2n), quaternionic sizes.
/// J1Zero and J1bJ occupy one quaternionic dimension, J2Zero two, and a
/// BetaPair J_1(beta) + J_1(-conj beta) two. kappa = -1 realizes the
/// conjugate-transposed convention of the form; it is carried on J2Zero and
/// J1bJ where the two conventions are inequivalent.
enum class BlockKind { J1Zero, J2Zero, J1bJ, BetaPair };

struct NormalBlock {
  BlockKind kind = BlockKind::J1Zero;
  int kappa = +1;        // J2Zero, J1bJ
  Rational b = 0;        // J1bJ: eigenvalue b j, b > 0
  Rational beta_re = 0;  // BetaPair: beta = re + im i, re > 0, im >= 0
  Rational beta_im = 0;

  int size() const;  // quaternionic dimensions occupied
  bool operator==(const NormalBlock&) const = default;
};

/// Matrix of the block's admissibility condition as a real-linear map in
/// x over the basis (1, i, j, k); the zero matrix iff the block admits (a, d).
/// The conditions, for all x in H:
///   J1Zero    x d - x a^2 = 0
///   J1bJ      x d + 2b j x a - x a^2 + b^2 x = 0
///   BetaPair  x d + 2 beta x a - x a^2 - beta^2 x = 0
///   J2Zero    x d - x a^2 + 2 x a = 0   (size-1 condition at 0 plus x a = 0)
/// Requires Re(a) = 0.
RatMat block_residual(const NormalBlock& block, const Quat& a, const Rational& d);

bool block_admits(const NormalBlock& block, const Quat& a, const Rational& d);

/// Closed-form solution set of a single block, as constraints on (a, d) with
/// a = mu i, mu >= 0 after normalization:
///   J1Zero    d = -mu^2
///   J2Zero    mu = 0, d = 0
///   J1bJ      mu = 0, d = -b^2
///   BetaPair  empty unless Im(beta) = 0; then mu = 0, d = beta^2
struct BlockSolution {
  bool empty = false;       // no (a, d) admits the block
  bool mu_free = false;     // J1Zero: any mu, d = -mu^2
  Rational fixed_d = 0;     // when !mu_free: required d (with mu = 0)
};
BlockSolution block_solution(const NormalBlock& block);

/// Canonical representative under the rescaling/conjugation action
///   a -> e^{2t} b a b^{-1},  A -> e^{2t} B A B^{-1},  d -> e^{4t} d.
/// a lands on the ray >= 0 times i and is scaled into {0, i}; with a = 0 the
/// leading continuous block parameter is scaled to 1 (or, with none present,
/// d is scaled into {-1, 0, 1}). Requires |a|^2 to be a rational square.
struct NormalizedTriple {
  Quat a;
  Rational d = 0;
  std::vector<NormalBlock> blocks;  // canonically sorted

  std::string key() const;  // total order / dedup key
  bool operator==(const NormalizedTriple&) const = default;
};
NormalizedTriple normalize(const Quat& a, std::vector<NormalBlock> blocks, const Rational& d);

/// Catalog tag of a normalized survivor, or nullopt.
std::optional<CaseTag> match_tag(int n, const NormalizedTriple& t);

/// Rationals of height <= height in [-range, range].
struct Grid {
  int height = 4;
  Rational range = 2;

  std::vector<Rational> values() const;
};

struct ClassOutcome {
  NormalizedTriple normalized;
  std::string matched_tag;  // "unmatched" when no catalog tag fits
};

/// Enumerates block multisets tiling H^n, intersects the per-block solution
/// sets over the grid, normalizes the survivors and matches them against the
/// catalog. Deterministic: outcomes are merged under the total order on
/// normalized triples. Requires n >= 2.
std::vector<ClassOutcome> classify_scan(int n, const Grid& grid, int threads = 0);

/// The normal-form content of a catalog case (for round-trip checks).
std::vector<NormalBlock> catalog_blocks(const CaseTag& tag);

}  // namespace qsh
