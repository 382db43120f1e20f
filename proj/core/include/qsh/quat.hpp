#pragma once

#include "qsh/rational.hpp"

namespace qsh {

/// Quaternion with exact rational coefficients of 1, i, j, k.
/// Multiplication follows ij = k, jk = i, ki = j.
struct Quat {
  Rational w, x, y, z;

  Quat() : w(0), x(0), y(0), z(0) {}
  Quat(Rational w_, Rational x_, Rational y_, Rational z_)
      : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  static Quat scalar(const Rational& r) { return Quat(r, 0, 0, 0); }
  /// Basis unit by index: 0 -> 1, 1 -> i, 2 -> j, 3 -> k.
  static Quat unit(int axis);

  bool is_zero() const { return w == 0 && x == 0 && y == 0 && z == 0; }
  bool is_real() const { return x == 0 && y == 0 && z == 0; }
  /// Element of sp(1), i.e. purely imaginary.
  bool is_imaginary() const { return w == 0; }

  Rational component(int axis) const;

  bool operator==(const Quat& o) const { return w == o.w && x == o.x && y == o.y && z == o.z; }
};

Quat operator+(const Quat& p, const Quat& q);
Quat operator-(const Quat& p, const Quat& q);
Quat operator-(const Quat& p);
Quat operator*(const Quat& p, const Quat& q);
Quat operator*(const Rational& s, const Quat& q);

Quat conj(const Quat& q);
Rational norm2(const Quat& q);

inline const Quat kOne{1, 0, 0, 0};
inline const Quat kI{0, 1, 0, 0};
inline const Quat kJ{0, 0, 1, 0};
inline const Quat kK{0, 0, 0, 1};

}  // namespace qsh
