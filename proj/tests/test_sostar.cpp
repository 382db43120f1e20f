#include <doctest.h>

#include "qsh/sostar.hpp"
#include "qsh/subspace.hpp"
#include "qsh/tila.hpp"
#include "test_util.hpp"

using namespace qsh;

namespace {

// random so*(2n) element for the form: A = B - jj^{-1} B* jj would need an
// inverse; simpler to span the solution space of A* jj + jj A = 0 once
std::vector<QMat> so_star_basis(const SkewForm& form) {
  int n = form.n();
  const QMat& jj = form.matrix();
  int col = 0;
  RatMat sys(4 * n * n, 4 * n * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      for (int axis = 0; axis < 4; ++axis) {
        QMat e(n, n);
        e.at(r, c) = Quat::unit(axis);
        RatVec image = realify(conj_transpose(e) * jj + jj * e);
        for (int row = 0; row < 4 * n * n; ++row) sys.at(row, col) = image[static_cast<size_t>(row)];
        ++col;
      }
  std::vector<QMat> basis;
  for (const RatVec& k : kernel_basis(sys)) basis.push_back(unrealify(k, n, n));
  return basis;
}

QMat random_member(testutil::Rng& rng, const SkewForm& form, const std::vector<QMat>& so_basis) {
  AmbientElement e;
  e.n = form.n();
  e.a = rng.quat();
  e.X = rng.qvec(form.n());
  e.Y = rng.qvec(form.n());
  e.c = rng.rational();
  e.d = rng.rational();
  e.A = QMat(form.n(), form.n());
  for (const QMat& b : so_basis) e.A = e.A + rng.rational() * b;
  return assemble(e, form);
}

}  // namespace

TEST_CASE("form matrices are invertible and skew-Hermitian") {
  for (const SkewForm& form :
       {SkewForm::skew_hermitian(3), SkewForm::darboux_even(4), SkewForm::darboux_odd(3),
        SkewForm::darboux_signed(1, 1)}) {
    const QMat& jj = form.matrix();
    CHECK(conj_transpose(jj) == -jj);
    // invertibility via real rank
    int n = form.n();
    RatMat real_form(4 * n, 4 * n);
    std::vector<QVec> basis = hbasis(n);
    for (int c = 0; c < 4 * n; ++c) {
      RatVec image = realify(mat_qvec(jj, basis[static_cast<size_t>(c)]));
      for (int r = 0; r < 4 * n; ++r) real_form.at(r, c) = image[static_cast<size_t>(r)];
    }
    CHECK(rank(real_form) == 4 * n);
  }
  CHECK_THROWS_AS(SkewForm::darboux_even(3), std::invalid_argument);
  CHECK_THROWS_AS(SkewForm::darboux_odd(2), std::invalid_argument);
}

TEST_CASE("darboux matrices match the displayed block forms") {
  SkewForm even = SkewForm::darboux_even(4);
  for (int i = 0; i < 2; ++i) {
    CHECK(even.matrix().at(i, 2 + i) == kOne);
    CHECK(even.matrix().at(2 + i, i) == -kOne);
  }
  SkewForm odd = SkewForm::darboux_odd(3);
  CHECK(odd.matrix().at(0, 2) == kOne);
  CHECK(odd.matrix().at(2, 0) == -kOne);
  CHECK(odd.matrix().at(1, 1) == kJ);
  SkewForm sh = SkewForm::skew_hermitian(2);
  CHECK(sh.matrix().at(0, 0) == kJ);
  CHECK(sh.matrix().at(1, 1) == kJ);
  CHECK(sh.matrix().at(0, 1).is_zero());
}

TEST_CASE("membership: sl2 triple, zero, and the block parametrization") {
  for (const SkewForm& form : {SkewForm::skew_hermitian(2), SkewForm::darboux_even(2)}) {
    CHECK(ambient_membership(sl2_e(form), form));
    CHECK(ambient_membership(sl2_f(form), form));
    CHECK(ambient_membership(sl2_h(form), form));
    CHECK(ambient_membership(QMat(4, 4), form));
  }
  SkewForm form = SkewForm::skew_hermitian(2);
  testutil::Rng rng(71);
  std::vector<QMat> so_basis = so_star_basis(form);
  CHECK(static_cast<int>(so_basis.size()) == so_star_dim(2));
  for (int t = 0; t < 10; ++t) CHECK(ambient_membership(random_member(rng, form, so_basis), form));
  CHECK_THROWS_AS(ambient_membership(QMat(3, 3), form), std::invalid_argument);
}

TEST_CASE("the predicate forces real corners: c = i leaves residual 2 Im(c)") {
  SkewForm form = SkewForm::skew_hermitian(2);
  QMat m(4, 4);
  m.at(3, 0) = kI;  // c = i in the bottom-left corner
  CHECK_FALSE(ambient_membership(m, form));
  QMat j = full_form_matrix(form);
  QMat residual = conj_transpose(m) * j + j * m;
  CHECK(residual.at(0, 0) == Quat(0, 2, 0, 0));
}

TEST_CASE("membership solution space has dimension 2(n+2)^2 - (n+2)") {
  for (int n : {1, 2, 3}) {
    SkewForm form = SkewForm::skew_hermitian(n);
    QMat j = full_form_matrix(form);
    int size = n + 2;
    RatMat sys(4 * size * size, 4 * size * size);
    int col = 0;
    for (int r = 0; r < size; ++r)
      for (int c = 0; c < size; ++c)
        for (int axis = 0; axis < 4; ++axis) {
          QMat e(size, size);
          e.at(r, c) = Quat::unit(axis);
          RatVec image = realify(conj_transpose(e) * j + j * e);
          for (int row = 0; row < 4 * size * size; ++row)
            sys.at(row, col) = image[static_cast<size_t>(row)];
          ++col;
        }
    int dim = static_cast<int>(kernel_basis(sys).size());
    CHECK(dim == ambient_dim(n));
    CHECK(dim == 1 + 4 * n + (2 * n * n - n + 4) + 4 * n + 1);
  }
}

TEST_CASE("grade_project: sl2 and tau shapes, parts sum to the input") {
  SkewForm form = SkewForm::skew_hermitian(2);
  GradedParts pe = grade_project(sl2_e(form), form);
  CHECK(pe.g_2 == sl2_e(form));
  CHECK(pe.g_m2.is_zero());
  CHECK(pe.g_m1.is_zero());
  CHECK(pe.g_0.is_zero());
  CHECK(pe.g_1.is_zero());

  GradedParts ph = grade_project(sl2_h(form), form);
  CHECK(ph.g_0 == sl2_h(form));
  CHECK(ph.g_2.is_zero());
  AmbientElement h = decompose(sl2_h(form), form);
  CHECK(h.a == kOne);
  CHECK(h.A.is_zero());

  // generic tau of the canonical form: parts in g_-2 (c = 1), g_0, g_2 only
  TauElement tau{2, kI, QMat(2, 2), -1, {}};
  QMat tm = assemble_tau(tau, form);
  GradedParts pt = grade_project(tm, form);
  CHECK(pt.g_m1.is_zero());
  CHECK(pt.g_1.is_zero());
  CHECK(decompose(pt.g_m2, form).c == 1);
  CHECK(decompose(pt.g_2, form).d == -1);
  CHECK(pt.g_m2 + pt.g_m1 + pt.g_0 + pt.g_1 + pt.g_2 == tm);

  testutil::Rng rng(13);
  std::vector<QMat> so_basis = so_star_basis(form);
  for (int t = 0; t < 5; ++t) {
    QMat m = random_member(rng, form, so_basis);
    GradedParts p = grade_project(m, form);
    CHECK(p.g_m2 + p.g_m1 + p.g_0 + p.g_1 + p.g_2 == m);
  }
}

TEST_CASE("grading law and Heisenberg structure") {
  for (int n : {1, 2}) {
    SkewForm form = SkewForm::skew_hermitian(n);
    testutil::Rng rng(100 + n);
    std::vector<QMat> so_basis = so_star_basis(form);
    auto part = [&](const GradedParts& p, int idx) -> const QMat& {
      switch (idx) {
        case 0: return p.g_m2;
        case 1: return p.g_m1;
        case 2: return p.g_0;
        case 3: return p.g_1;
        default: return p.g_2;
      }
    };
    for (int t = 0; t < 4; ++t) {
      GradedParts pm = grade_project(random_member(rng, form, so_basis), form);
      GradedParts pn = grade_project(random_member(rng, form, so_basis), form);
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
          QMat br = commutator(part(pm, i), part(pn, j));
          int total = (i - 2) + (j - 2);
          if (total < -2 || total > 2) {
            CHECK(br.is_zero());
          } else {
            GradedParts pb = grade_project(br, form);
            for (int k = 0; k < 5; ++k)
              if (k - 2 != total) CHECK(part(pb, k).is_zero());
          }
        }
    }
    // Heisenberg: [g_-1, g_-1] in g_-2 and [g_-2, g_-] = 0
    QVec x = rng.qvec(n), y = rng.qvec(n);
    QMat bx = embed_g_minus1(x, form), by = embed_g_minus1(y, form);
    QMat br = commutator(bx, by);
    GradedParts pb = grade_project(br, form);
    CHECK(pb.g_m1.is_zero());
    CHECK(pb.g_0.is_zero());
    CHECK(pb.g_1.is_zero());
    CHECK(pb.g_2.is_zero());
    CHECK(commutator(sl2_f(form), bx).is_zero());
  }
}

TEST_CASE("sl2 relations") {
  SkewForm form = SkewForm::darboux_even(2);
  QMat e = sl2_e(form), f = sl2_f(form), h = sl2_h(form);
  CHECK(commutator(e, f) == h);
  CHECK(commutator(h, e) == Rational(2) * e);
  CHECK(commutator(h, f) == Rational(-2) * f);
}

TEST_CASE("levi form: antisymmetry, value, rank, quaternion invariance") {
  SkewForm form = SkewForm::skew_hermitian(1);
  CHECK(levi_form({kOne}, {kJ}, form) != 0);
  testutil::Rng rng(37);
  for (int t = 0; t < 20; ++t) {
    QVec x = rng.qvec(1), y = rng.qvec(1);
    CHECK(levi_form(x, x, form) == 0);
    CHECK(levi_form(x, y, form) == -levi_form(y, x, form));
    // right multiplication by i preserves the form
    CHECK(levi_form(qvec_right_mul(x, kI), qvec_right_mul(y, kI), form) == levi_form(x, y, form));
    // the g_-2 coefficient of the commutator of the embeddings, directly
    QMat br = commutator(embed_g_minus1(x, form), embed_g_minus1(y, form));
    CHECK(br.at(2, 0).w == levi_form(x, y, form));
  }
  CHECK(rank(levi_gram(form)) == 4);
  CHECK(rank(levi_gram(SkewForm::darboux_even(2))) == 8);
}

TEST_CASE("pseudo-Hermitian metrics") {
  SkewForm form = SkewForm::skew_hermitian(1);
  testutil::Rng rng(43);
  QVec zero = qvec_zero(1);
  for (int t = 0; t < 20; ++t) {
    QVec c = rng.qvec(1), x = rng.qvec(1);
    std::array<Rational, 3> g = pseudo_hermitian_metrics(c, x, form);
    std::array<Rational, 3> gt = pseudo_hermitian_metrics(x, c, form);
    CHECK(g == gt);  // symmetric
    // zero real part of (C* jj X + X* jj C)/2, by direct expansion
    Quat s = conj(c[0]) * kJ * x[0] + conj(x[0]) * kJ * c[0];
    CHECK(s.w == 0);
    CHECK(Rational(1, 2) * s.x == g[0]);
    CHECK(Rational(1, 2) * s.y == g[1]);
    CHECK(Rational(1, 2) * s.z == g[2]);
  }
  CHECK(pseudo_hermitian_metrics(zero, rng.qvec(1), form) == std::array<Rational, 3>{0, 0, 0});
  for (int a = 0; a < 3; ++a) {
    RatMat gram = pseudo_hermitian_gram(form, a);
    CHECK(rank(gram) == 4);
    CHECK(transpose(gram) == gram);
  }
}

TEST_CASE("bracket of members is a member") {
  SkewForm form = SkewForm::darboux_even(2);
  testutil::Rng rng(47);
  std::vector<QMat> so_basis = so_star_basis(form);
  for (int t = 0; t < 6; ++t) {
    QMat a = random_member(rng, form, so_basis);
    QMat b = random_member(rng, form, so_basis);
    CHECK(ambient_membership(commutator(a, b), form));
  }
}

TEST_CASE("assemble/decompose round trip and c,d realness") {
  SkewForm form = SkewForm::darboux_odd(3);
  testutil::Rng rng(53);
  std::vector<QMat> so_basis = so_star_basis(form);
  for (int t = 0; t < 5; ++t) {
    QMat m = random_member(rng, form, so_basis);
    AmbientElement e = decompose(m, form);
    CHECK(assemble(e, form) == m);
    CHECK(m.at(4, 0) == Quat::scalar(e.c));
    CHECK(m.at(0, 4) == Quat::scalar(e.d));
  }
  QMat bad(5, 5);
  bad.at(0, 4) = kI;  // imaginary d
  CHECK_THROWS_AS(decompose(bad, form), std::invalid_argument);
}
