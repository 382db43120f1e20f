#include <doctest.h>

#include "qsh/torsion.hpp"
#include "test_util.hpp"

using namespace qsh;

TEST_CASE("example 6.2: lambda = x4 - x1 exactly") {
  TorsionExample ex = torsion_example(2);
  TorsionReport rep = torsion_coefficient(ex.tauhat, ex.form, ex.m_basis);
  REQUIRE(rep.on_line);
  // basis order: X1 over (1, i, j, k), then X2 over (1, i, j, k)
  RatVec expected = {-1, 0, 0, 1, 0, 0, 0, 0};
  CHECK(rep.lambda == expected);

  // the bracket relation holds entrywise: [tau^, m] = 2 lambda tau^
  QMat tau = assemble_tau(ex.tauhat, ex.form);
  for (size_t i = 0; i < ex.m_basis.size(); ++i) {
    QMat br = commutator(tau, ex.m_basis[i]);
    Rational coeff = 2 * rep.lambda[i];
    CHECK(br == coeff * tau);
  }
}

TEST_CASE("example 6.2 at n = 3 stays on the line") {
  TorsionExample ex = torsion_example(3);
  CHECK(ex.m_basis.size() == 12);
  TorsionReport rep = torsion_coefficient(ex.tauhat, ex.form, ex.m_basis);
  CHECK(rep.on_line);
  RatVec expected = {-1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0};
  CHECK(rep.lambda == expected);
}

TEST_CASE("symmetric catalog cases have zero torsion functional") {
  for (const char* tag : {"ns-even:2,1,0", "m1:2", "m2:2,1,1", "m3:2", "ns-odd:3,1,0"}) {
    CatalogCase cc = make_case(parse_tag(tag));
    TorsionReport rep = torsion_coefficient(cc.tau, cc.form, build_m(cc.tau, cc.form));
    REQUIRE(rep.on_line);
    for (const Rational& l : rep.lambda) CHECK(l == 0);
  }
}

TEST_CASE("negative control: perturbed basis falls off the line") {
  TorsionExample ex = torsion_example(2);

  // membership-preserving perturbation: add a stray g_-1 member to one
  // basis element; its bracket with tau^ leaves the tau^ line
  std::vector<QMat> perturbed = ex.m_basis;
  QVec stray = qvec_zero(2);
  stray[1] = kJ;
  perturbed[0] = perturbed[0] + embed_g_minus1(stray, ex.form);
  TorsionReport rep = torsion_coefficient(ex.tauhat, ex.form, perturbed);
  CHECK_FALSE(rep.on_line);
  CHECK(rep.off_line_index == 0);
  CHECK_FALSE(rep.residual.is_zero());

  // raw entry edits break the membership precondition and are rejected
  std::vector<QMat> broken = ex.m_basis;
  broken[0].at(1, 0) = broken[0].at(1, 0) + kJ;
  CHECK_THROWS_WITH_AS(torsion_coefficient(ex.tauhat, ex.form, broken),
                       "m basis element is not an ambient member", std::invalid_argument);
}

TEST_CASE("symmetric forcing: the metrics detect every nonzero C") {
  testutil::Rng rng(67);
  for (const SkewForm& form :
       {SkewForm::skew_hermitian(2), SkewForm::darboux_even(2), SkewForm::darboux_signed(1, 1)}) {
    CHECK(stacked_metric_rank(form) == 4 * form.n());
    CHECK(symmetric_forcing_check(form, qvec_zero(form.n())));
    for (int t = 0; t < 10; ++t) {
      QVec c = rng.qvec(form.n());
      bool zero = true;
      for (const Quat& q : c)
        if (!q.is_zero()) zero = false;
      if (zero) continue;
      CHECK(symmetric_forcing_check(form, c));
    }
  }
  // a single unit vector is already seen by some metric
  QVec e = qvec_zero(2);
  e[0] = kOne;
  CHECK(symmetric_forcing_check(SkewForm::skew_hermitian(2), e));
}

TEST_CASE("solvable subalgebra report") {
  TorsionExample ex = torsion_example(2);
  SolvableReport rep = solvable_subalgebra_report(ex.tauhat, ex.form, ex.m_basis);
  CHECK(rep.dim == 9);
  CHECK(rep.solvable);

  // catalog linear model: abelian of dimension 4n
  CatalogCase lin = make_case(parse_tag("ns-even:2,0,0"));
  SolvableReport lin_rep = solvable_subalgebra_report(lin.tau, lin.form, build_m(lin.tau, lin.form));
  CHECK(lin_rep.dim == 8);
  CHECK(lin_rep.solvable);

  // example 5.2(1): the closure is the full 15-dimensional algebra, not solvable
  CatalogCase ns = make_case(parse_tag("ns-even:2,1,0"));
  SolvableReport ns_rep = solvable_subalgebra_report(ns.tau, ns.form, build_m(ns.tau, ns.form));
  CHECK(ns_rep.dim == 15);
  CHECK_FALSE(ns_rep.solvable);
}
