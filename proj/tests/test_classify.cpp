#include <doctest.h>

#include <algorithm>
#include <set>

#include "qsh/classify.hpp"
#include "test_util.hpp"

using namespace qsh;

namespace {

NormalBlock j1zero() { return {BlockKind::J1Zero, +1, 0, 0, 0}; }
NormalBlock j2zero(int kappa) { return {BlockKind::J2Zero, kappa, 0, 0, 0}; }
NormalBlock j1bj(const Rational& b, int kappa = +1) { return {BlockKind::J1bJ, kappa, b, 0, 0}; }
NormalBlock beta_pair(const Rational& re, const Rational& im = 0) {
  return {BlockKind::BetaPair, +1, 0, re, im};
}

// Concrete (A, jj) realization of a block multiset, blocks laid out
// diagonally; kappa = -1 realized as the conjugate-transposed block.
std::pair<QMat, QMat> realize(const std::vector<NormalBlock>& blocks) {
  int n = 0;
  for (const NormalBlock& b : blocks) n += b.size();
  QMat a(n, n), jj(n, n);
  int at = 0;
  for (const NormalBlock& b : blocks) {
    switch (b.kind) {
      case BlockKind::J1Zero:
        jj.at(at, at) = kJ;
        break;
      case BlockKind::J1bJ:
        a.at(at, at) = (b.kappa > 0 ? b.b : -b.b) * kJ;
        jj.at(at, at) = kJ;
        break;
      case BlockKind::J2Zero:
        if (b.kappa > 0)
          a.at(at + 1, at) = kOne;  // units under the diagonal
        else
          a.at(at, at + 1) = kOne;  // conjugate transposed
        jj.at(at, at + 1) = kOne;
        jj.at(at + 1, at) = -kOne;
        break;
      case BlockKind::BetaPair:
        a.at(at, at) = Quat(b.beta_re, b.beta_im, 0, 0);
        a.at(at + 1, at + 1) = -Quat(b.beta_re, -b.beta_im, 0, 0);
        jj.at(at, at + 1) = kOne;
        jj.at(at + 1, at) = -kOne;
        break;
    }
    at += b.size();
  }
  return {a, jj};
}

}  // namespace

TEST_CASE("per-block conditions at the paper's solution points") {
  CHECK(block_residual(j1zero(), kI, -1).is_zero());          // (a = i, d = -1)
  CHECK(block_residual(j1zero(), Quat(), 0).is_zero());       // (a = 0, d = 0)
  CHECK(block_residual(j1bj(1), Quat(), -1).is_zero());       // (a = 0, b = 1, d = -1)
  CHECK(block_residual(beta_pair(1), Quat(), 1).is_zero());   // (a = 0, beta = 1, d = 1)
  CHECK(block_residual(j2zero(+1), Quat(), 0).is_zero());

  CHECK_FALSE(block_residual(j1zero(), Quat(), 1).is_zero());
  CHECK_FALSE(block_residual(j1bj(1), kI, -1).is_zero());
  CHECK_FALSE(block_residual(beta_pair(1, 1), Quat(), 1).is_zero());
  CHECK_FALSE(block_residual(j2zero(+1), kI, 0).is_zero());
  CHECK_THROWS_AS(block_residual(j1zero(), Quat(1, 0, 0, 0), 0), std::invalid_argument);
}

TEST_CASE("closed-form solution sets agree with the grid evaluation") {
  Grid grid;
  std::vector<Rational> vals = grid.values();
  std::vector<NormalBlock> blocks = {j1zero(), j2zero(+1), j2zero(-1), j1bj(1), j1bj(Rational(1, 2)),
                                     j1bj(2), beta_pair(1), beta_pair(Rational(1, 2)),
                                     beta_pair(1, 1), beta_pair(2, Rational(1, 2))};
  for (const NormalBlock& b : blocks) {
    BlockSolution sol = block_solution(b);
    for (const Rational& mu : vals) {
      if (mu < 0) continue;
      Quat a(0, mu, 0, 0);
      for (const Rational& d : vals) {
        bool admitted = block_admits(b, a, d);
        bool predicted;
        if (sol.empty)
          predicted = false;
        else if (sol.mu_free)
          predicted = (d == -(mu * mu));
        else
          predicted = (mu == 0 && d == sol.fixed_d);
        CHECK(admitted == predicted);
      }
    }
  }
}

TEST_CASE("size-2 blocks with nonzero eigenvalue admit no (a, d) on the grid") {
  // the nilpotent-order conditions 2b j x + x a = 0 and 2 beta x + x a = 0
  // (for all x) rule out size-2 blocks in the bj and beta families; checked
  // exactly over the default grid
  Grid grid;
  std::vector<Rational> vals = grid.values();
  auto left_right = [](const Quat& left, const Quat& a) {
    // operator x -> left * x + x * a over the basis (1, i, j, k)
    RatMat m(4, 4);
    for (int col = 0; col < 4; ++col) {
      Quat image = left * Quat::unit(col) + Quat::unit(col) * a;
      m.at(0, col) = image.w;
      m.at(1, col) = image.x;
      m.at(2, col) = image.y;
      m.at(3, col) = image.z;
    }
    return m;
  };
  for (const Rational& mu : vals) {
    if (mu < 0) continue;
    Quat a(0, mu, 0, 0);
    for (const Rational& b : vals) {
      if (b <= 0) continue;
      CHECK_FALSE(left_right(Quat(0, 0, 2 * b, 0), a).is_zero());  // 2bj x + x a
      for (const Rational& im : vals) {
        if (im < 0) continue;
        CHECK_FALSE(left_right(Quat(2 * b, 2 * im, 0, 0), a).is_zero());  // 2beta x + x a
      }
    }
  }
}

TEST_CASE("symtest factors through the per-block residuals (n <= 3)") {
  // every multiset realization: assembled symtest passes iff each block
  // admits the shared (a, d)
  Grid small{2, 2};
  std::vector<Rational> vals = small.values();
  std::vector<Rational> pos, nonneg;
  for (const Rational& v : vals) {
    if (v > 0) pos.push_back(v);
    if (v >= 0) nonneg.push_back(v);
  }
  std::vector<NormalBlock> atoms = {j1zero(), j2zero(+1), j2zero(-1)};
  for (const Rational& b : pos) {
    atoms.push_back(j1bj(b, +1));
    atoms.push_back(j1bj(b, -1));
  }
  for (const Rational& re : pos)
    for (const Rational& im : nonneg) atoms.push_back(beta_pair(re, im));

  std::vector<std::vector<NormalBlock>> multisets;
  for (size_t i = 0; i < atoms.size(); ++i) {
    if (atoms[i].size() == 2) multisets.push_back({atoms[i]});  // n = 2
    for (size_t j = i; j < atoms.size(); ++j) {
      int s2 = atoms[i].size() + atoms[j].size();
      if (s2 == 2) multisets.push_back({atoms[i], atoms[j]});  // n = 2
      if (s2 == 3) multisets.push_back({atoms[i], atoms[j]});  // n = 3
      if (s2 > 3) continue;
      if (s2 == 2)
        for (size_t k = j; k < atoms.size(); ++k)
          if (atoms[k].size() == 1) multisets.push_back({atoms[i], atoms[j], atoms[k]});
    }
  }
  int checked = 0;
  for (const std::vector<NormalBlock>& blocks : multisets) {
    auto [amat, jj] = realize(blocks);
    int n = amat.rows();
    REQUIRE((n == 2 || n == 3));
    // the realization must itself sit in so*(2n) for its form
    CHECK((conj_transpose(amat) * jj + jj * amat).is_zero());
    for (const Rational& mu : nonneg) {
      Quat a(0, mu, 0, 0);
      for (const Rational& d : vals) {
        TauElement tau{n, a, amat, d, {}};
        bool from_blocks = true;
        for (const NormalBlock& b : blocks)
          if (!block_admits(b, a, d)) from_blocks = false;
        CHECK(symtest(tau).pass == from_blocks);
        ++checked;
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("normalize: worked examples") {
  // a = 3k, d = -9 -> a = i, d = -1
  NormalizedTriple t1 = normalize(Quat(0, 0, 0, 3), {j1zero(), j1zero()}, -9);
  CHECK(t1.a == kI);
  CHECK(t1.d == -1);
  // a = 0, d = 0: fixed point
  NormalizedTriple t2 = normalize(Quat(), {j2zero(+1)}, 0);
  CHECK(t2.a == Quat());
  CHECK(t2.d == 0);
  // a = 0, b = 2, d = -4 -> b = 1, d = -1
  NormalizedTriple t3 = normalize(Quat(), {j1bj(2)}, -4);
  CHECK(t3.a == Quat());
  CHECK(t3.d == -1);
  CHECK(t3.blocks[0].b == 1);
  // no continuous parameter: d lands in {-1, 0, 1}
  NormalizedTriple t4 = normalize(Quat(), {j2zero(+1)}, Rational(-7, 3));
  CHECK(t4.d == -1);
  CHECK_THROWS_AS(normalize(Quat(0, 1, 1, 0), {}, 0), std::invalid_argument);  // |a| irrational
}

TEST_CASE("normalize is idempotent and constant on orbits") {
  testutil::Rng rng(61);
  std::vector<std::vector<NormalBlock>> families = {
      {j1zero(), j1zero()}, {j1bj(1), j1bj(1)}, {beta_pair(1)}, {j2zero(-1)}};
  for (int t = 0; t < 40; ++t) {
    const std::vector<NormalBlock>& blocks = families[static_cast<size_t>(rng.integer(0, 3))];
    Quat a = Rational(rng.integer(0, 3)) * kI;
    Rational d = rng.rational();
    NormalizedTriple base = normalize(a, blocks, d);
    NormalizedTriple again = normalize(base.a, base.blocks, base.d);
    CHECK(base == again);

    // group action: a -> s^2 u a u^-1, params -> s^2 params, d -> s^4 d
    Quat u = rng.unit_quat();
    Rational s2 = Rational(rng.integer(1, 3), rng.integer(1, 3));
    s2.canonicalize();
    Quat a_moved = s2 * (u * a * conj(u));
    std::vector<NormalBlock> moved = blocks;
    for (NormalBlock& b : moved) {
      b.b *= s2;
      b.beta_re *= s2;
      b.beta_im *= s2;
    }
    NormalizedTriple orbit = normalize(a_moved, moved, d * s2 * s2);
    CHECK(base == orbit);
  }
}

TEST_CASE("classify n=2: exactly eight matched outcome classes") {
  std::vector<ClassOutcome> outcomes = classify_scan(2, Grid{});
  CHECK(outcomes.size() == 8);
  std::multiset<std::string> tags;
  for (const ClassOutcome& o : outcomes) tags.insert(o.matched_tag);
  std::multiset<std::string> expected = {"ns-even:2,0,0", "ns-even:2,1,0", "ns-even:2,0,1",
                                         "m1:2",          "m2:2,2,0",      "m2:2,1,1",
                                         "m2:2,0,2",      "m3:2"};
  CHECK(tags == expected);
  // determinism: byte-identical keys across runs
  std::vector<ClassOutcome> again = classify_scan(2, Grid{});
  REQUIRE(again.size() == outcomes.size());
  for (size_t i = 0; i < outcomes.size(); ++i) {
    CHECK(again[i].normalized.key() == outcomes[i].normalized.key());
    CHECK(again[i].matched_tag == outcomes[i].matched_tag);
  }
  // single-threaded run agrees with the parallel one
  std::vector<ClassOutcome> serial = classify_scan(2, Grid{}, 1);
  REQUIRE(serial.size() == outcomes.size());
  for (size_t i = 0; i < outcomes.size(); ++i)
    CHECK(serial[i].normalized.key() == outcomes[i].normalized.key());
}

TEST_CASE("classify n=3: no m3 outcomes, nothing unmatched") {
  std::vector<ClassOutcome> outcomes = classify_scan(3, Grid{});
  CHECK_FALSE(outcomes.empty());
  for (const ClassOutcome& o : outcomes) {
    CHECK(o.matched_tag != "unmatched");
    CHECK(o.matched_tag.substr(0, 3) != "m3:");
  }
  // the all-J2(+1) glue at a = d = 0 matches the (1,0) family
  bool has_ns10 = false;
  for (const ClassOutcome& o : outcomes)
    if (o.matched_tag == "ns-odd:3,1,0") has_ns10 = true;
  CHECK(has_ns10);
}

TEST_CASE("grid values are the height-bounded rationals in range") {
  Grid g{2, 2};
  std::vector<Rational> vals = g.values();
  CHECK(std::find(vals.begin(), vals.end(), Rational(1, 2)) != vals.end());
  CHECK(std::find(vals.begin(), vals.end(), Rational(2)) != vals.end());
  CHECK(std::find(vals.begin(), vals.end(), Rational(3, 2)) == vals.end());  // height 3
  CHECK(std::find(vals.begin(), vals.end(), Rational(1, 3)) == vals.end());  // height 3
  CHECK(std::is_sorted(vals.begin(), vals.end()));

  Grid dflt{};
  std::vector<Rational> dv = dflt.values();
  CHECK(std::find(dv.begin(), dv.end(), Rational(3, 2)) != dv.end());
  CHECK(std::find(dv.begin(), dv.end(), Rational(-3, 4)) != dv.end());
  CHECK(std::find(dv.begin(), dv.end(), Rational(3)) == dv.end());  // out of range
}

TEST_CASE("scan rejects n < 2") {
  CHECK_THROWS_AS(classify_scan(1, Grid{}), std::invalid_argument);
}
