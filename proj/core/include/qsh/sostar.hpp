#pragma once

#include <array>

#include "qsh/linalg.hpp"
#include "qsh/qmat.hpp"

namespace qsh {

enum class FormVariant { SkewHermitian, DarbouxEven, DarbouxOdd, DarbouxSigned };

/// Invertible skew-Hermitian form jj on H^n (jj* = -jj). The variant fixes
/// the basis convention:
///   SkewHermitian  jj = j I_n
///   DarbouxEven    jj = ((0, I_{n/2,0}), (I_{0,n/2}, 0)), n even
///   DarbouxOdd     three-block form with central entry j, n odd
///   DarbouxSigned  ((0, I_{p,q}), (-I_{p,q}, 0)), n = 2(p+q)
class SkewForm {
 public:
  static SkewForm skew_hermitian(int n);
  static SkewForm darboux_even(int n);
  static SkewForm darboux_odd(int n);
  static SkewForm darboux_signed(int p, int q);

  int n() const { return n_; }
  FormVariant variant() const { return variant_; }
  int p() const { return p_; }
  int q() const { return q_; }
  const QMat& matrix() const { return jj_; }

 private:
  SkewForm(int n, FormVariant v, int p, int q, QMat jj)
      : n_(n), variant_(v), p_(p), q_(q), jj_(std::move(jj)) {}
  int n_;
  FormVariant variant_;
  int p_ = 0, q_ = 0;
  QMat jj_;
};

/// Element of so*(2n+4) in block coordinates:
///   ( a      Y* jj   d  )
///   ( X      A       Y  )
///   ( c     -X* jj  -a* )
/// with a in H, X, Y in H^n, c, d real and A* jj + jj A = 0.
struct AmbientElement {
  int n = 0;
  Quat a;
  QVec X, Y;
  Rational c, d;
  QMat A;
};

/// The full form J on H^(n+2): block matrix ((0,0,1),(0,jj,0),(-1,0,0)).
/// so*(2n+4) = {M : M* J + J M = 0}; the block parametrization above is the
/// general solution, which is pinned down by a unit test.
QMat full_form_matrix(const SkewForm& form);

/// Membership predicate M* J + J M = 0. Throws std::invalid_argument when M
/// is not (n+2) x (n+2).
bool ambient_membership(const QMat& m, const SkewForm& form);

QMat assemble(const AmbientElement& e, const SkewForm& form);
/// Inverse of assemble on members; throws std::invalid_argument otherwise.
AmbientElement decompose(const QMat& m, const SkewForm& form);

/// The five contact-grading components, as matrices summing to the input.
/// Real dimensions are 1, 4n, 2n^2 - n + 4, 4n, 1.
struct GradedParts {
  QMat g_m2, g_m1, g_0, g_1, g_2;
};
GradedParts grade_project(const QMat& m, const SkewForm& form);

/// sl2-triple attached to the grading: e in g_2, f in g_-2, h = [e, f].
QMat sl2_e(const SkewForm& form);
QMat sl2_f(const SkewForm& form);
QMat sl2_h(const SkewForm& form);

/// Embedding of H^n as g_-1.
QMat embed_g_minus1(const QVec& x, const SkewForm& form);

/// g_-2 coefficient of [embed(X), embed(Y)]; equals 2 Re(Y* jj X).
/// Antisymmetric and nondegenerate as a real bilinear form on R^(4n).
Rational levi_form(const QVec& x, const QVec& y, const SkewForm& form);

/// Gram matrix of levi_form over the real basis of H^n.
RatMat levi_gram(const SkewForm& form);

/// i, j, k components of (C* jj X + X* jj C)/2; the real part vanishes
/// identically. Each component is a symmetric real bilinear form of full
/// rank 4n for the shipped forms.
std::array<Rational, 3> pseudo_hermitian_metrics(const QVec& c, const QVec& x,
                                                 const SkewForm& form);

/// Gram matrix of the a-th pseudo-Hermitian metric (a = 0, 1, 2).
RatMat pseudo_hermitian_gram(const SkewForm& form, int a);

/// n(2n-1), the real dimension of so*(2n).
int so_star_dim(int n);
/// 2(n+2)^2 - (n+2), the real dimension of so*(2n+4).
int ambient_dim(int n);
/// Real coordinate count of the (n+2) x (n+2) matrix space.
int ambient_coord_dim(int n);

}  // namespace qsh
