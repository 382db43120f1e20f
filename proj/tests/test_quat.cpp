#include <doctest.h>

#include "qsh/qmat.hpp"
#include "test_util.hpp"

using namespace qsh;

TEST_CASE("multiplication table") {
  CHECK(kI * kJ == kK);
  CHECK(kJ * kK == kI);
  CHECK(kK * kI == kJ);
  CHECK(kJ * kI == -kK);
  CHECK(kI * kI == -kOne);
  CHECK(kJ * kJ == -kOne);
  CHECK(kK * kK == -kOne);
  // (1+i)(1-i) = 2
  Quat p(1, 1, 0, 0), q(1, -1, 0, 0);
  CHECK(p * q == Quat(2, 0, 0, 0));
}

TEST_CASE("conjugation and norm") {
  testutil::Rng rng;
  for (int t = 0; t < 50; ++t) {
    Quat p = rng.quat(), q = rng.quat();
    CHECK(conj(p * q) == conj(q) * conj(p));
    CHECK(conj(p) * p == Quat::scalar(norm2(p)));
  }
  CHECK(norm2(Quat()) == 0);
}

TEST_CASE("associativity on random triples") {
  testutil::Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    Quat p = rng.quat(), q = rng.quat(), r = rng.quat();
    CHECK((p * q) * r == p * (q * r));
  }
}

TEST_CASE("conj_transpose") {
  QMat m(1, 1);
  m.at(0, 0) = kJ;
  CHECK(conj_transpose(m).at(0, 0) == -kJ);

  CHECK(conj_transpose(QMat::identity(3)) == QMat::identity(3));

  QMat col(2, 1);
  col.at(0, 0) = kI;
  col.at(1, 0) = Quat(1, 0, 0, 1);
  QMat row = conj_transpose(col);
  CHECK(row.rows() == 1);
  CHECK(row.cols() == 2);
  CHECK(row.at(0, 0) == -kI);
  CHECK(row.at(0, 1) == Quat(1, 0, 0, -1));

  testutil::Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    QMat a = rng.qmat(2, 3), b = rng.qmat(3, 2);
    CHECK(conj_transpose(a * b) == conj_transpose(b) * conj_transpose(a));
    CHECK(conj_transpose(conj_transpose(a)) == a);
  }
}

TEST_CASE("real_trace") {
  CHECK(real_trace(QMat::identity(3)) == 12);
  QMat d(2, 2);
  d.at(0, 0) = kI;
  d.at(1, 1) = kJ;
  CHECK(real_trace(d) == 0);
  QMat s(1, 1);
  s.at(0, 0) = Quat(Rational(1, 2), 0, 0, 0);
  CHECK(real_trace(s) == 2);
  CHECK_THROWS_AS(real_trace(QMat(2, 3)), std::invalid_argument);
}

TEST_CASE("commutator basics") {
  QMat di(1, 1), dj(1, 1);
  di.at(0, 0) = kI;
  dj.at(0, 0) = kJ;
  QMat c = commutator(di, dj);
  CHECK(c.at(0, 0) == Quat(0, 0, 0, 2));  // ij - ji = 2k

  testutil::Rng rng(11);
  QMat m = rng.qmat(3, 3);
  CHECK(commutator(m, m).is_zero());
  CHECK_THROWS_AS(commutator(QMat(2, 2), QMat(3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(commutator(QMat(2, 3), QMat(2, 3)), std::invalid_argument);
}

TEST_CASE("jacobi identity on random matrix triples") {
  testutil::Rng rng(17);
  for (int t = 0; t < 8; ++t) {
    QMat a = rng.qmat(3, 3), b = rng.qmat(3, 3), c = rng.qmat(3, 3);
    QMat s = commutator(commutator(a, b), c) + commutator(commutator(b, c), a) +
             commutator(commutator(c, a), b);
    CHECK(s.is_zero());
  }
}

TEST_CASE("real trace of commutators vanishes") {
  testutil::Rng rng(23);
  for (int t = 0; t < 10; ++t) {
    QMat a = rng.qmat(3, 3), b = rng.qmat(3, 3);
    CHECK(real_trace(commutator(a, b)) == 0);
  }
}

TEST_CASE("realify is a linear bijection") {
  testutil::Rng rng(29);
  for (int t = 0; t < 10; ++t) {
    QMat a = rng.qmat(2, 3), b = rng.qmat(2, 3);
    Rational alpha = rng.rational(), beta = rng.rational();
    RatVec lhs = realify(alpha * a + beta * b);
    RatVec ra = realify(a), rb = realify(b);
    for (size_t i = 0; i < lhs.size(); ++i) CHECK(lhs[i] == alpha * ra[i] + beta * rb[i]);
    CHECK(unrealify(realify(a), 2, 3) == a);
  }
  CHECK(realify(QMat(2, 3)).size() == 24);
}

TEST_CASE("rational string round trip") {
  CHECK(rat_from_string("3/4") == Rational(3, 4));
  CHECK(rat_from_string("-7") == -7);
  CHECK(rat_to_string(Rational(-6, 4)) == "-3/2");
  CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
  CHECK(rat_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK(rat_sqrt(Rational(2)) == std::nullopt);
  CHECK(rat_sqrt(Rational(0)) == Rational(0));
}
