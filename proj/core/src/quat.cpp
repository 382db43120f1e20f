#include "qsh/quat.hpp"

#include <stdexcept>

namespace qsh {

Rational rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  size_t slash = s.find('/');
  try {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (slash != std::string::npos && mpz_class(q.get_den()) == 0)
      throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw;
  } catch (...) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

std::string rat_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

std::optional<Rational> rat_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  mpz_class num = q.get_num(), den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

Quat Quat::unit(int axis) {
  switch (axis) {
    case 0: return kOne;
    case 1: return kI;
    case 2: return kJ;
    case 3: return kK;
    default: throw std::invalid_argument("quaternion axis out of range");
  }
}

Rational Quat::component(int axis) const {
  switch (axis) {
    case 0: return w;
    case 1: return x;
    case 2: return y;
    case 3: return z;
    default: throw std::invalid_argument("quaternion axis out of range");
  }
}

Quat operator+(const Quat& p, const Quat& q) {
  return Quat(p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z);
}

Quat operator-(const Quat& p, const Quat& q) {
  return Quat(p.w - q.w, p.x - q.x, p.y - q.y, p.z - q.z);
}

Quat operator-(const Quat& p) { return Quat(-p.w, -p.x, -p.y, -p.z); }

Quat operator*(const Quat& p, const Quat& q) {
  return Quat(p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
              p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
              p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
              p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w);
}

Quat operator*(const Rational& s, const Quat& q) {
  return Quat(s * q.w, s * q.x, s * q.y, s * q.z);
}

Quat conj(const Quat& q) { return Quat(q.w, -q.x, -q.y, -q.z); }

Rational norm2(const Quat& q) { return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z; }

}  // namespace qsh
