#pragma once

#include <random>

#include "qsh/qmat.hpp"

namespace qsh::testutil {

// Deterministic small-rational fuzz source for the property tests.
class Rng {
 public:
  explicit Rng(unsigned seed = 12345u) : gen_(seed) {}

  Rational rational(int num_bound = 4, int den_bound = 3) {
    std::uniform_int_distribution<int> num(-num_bound, num_bound);
    std::uniform_int_distribution<int> den(1, den_bound);
    Rational r(num(gen_), den(gen_));
    r.canonicalize();
    return r;
  }

  Quat quat() { return Quat(rational(), rational(), rational(), rational()); }

  Quat imaginary_quat() { return Quat(0, rational(), rational(), rational()); }

  QVec qvec(int n) {
    QVec v(static_cast<size_t>(n));
    for (Quat& q : v) q = quat();
    return v;
  }

  QMat qmat(int rows, int cols) {
    QMat m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m.at(r, c) = quat();
    return m;
  }

  // Pythagorean-style rational unit quaternions: q / |q| with |q|^2 a square.
  Quat unit_quat() {
    static const Quat units[] = {
        Quat(Rational(3, 5), Rational(4, 5), 0, 0),
        Quat(Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)),
        Quat(Rational(2, 3), Rational(2, 3), Rational(1, 3), 0),
        Quat(0, Rational(3, 5), 0, Rational(4, 5)),
        Quat(Rational(1, 3), Rational(2, 3), Rational(2, 3), 0),
        Quat(1, 0, 0, 0),
        Quat(0, 0, 1, 0)};
    std::uniform_int_distribution<size_t> pick(0, std::size(units) - 1);
    return units[pick(gen_)];
  }

  int integer(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(gen_);
  }

 private:
  std::mt19937 gen_;
};

}  // namespace qsh::testutil
