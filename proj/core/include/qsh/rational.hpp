#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace qsh {

/// Exact arbitrary-precision rational. All core arithmetic runs over these;
/// there is no floating point anywhere in the library.
using Rational = mpq_class;
using RatVec = std::vector<Rational>;

/// Parses "p/q" or "p" (optional sign). Throws std::invalid_argument on junk.
Rational rat_from_string(const std::string& s);

/// Canonical "p/q" form, plain "p" when the denominator is 1.
std::string rat_to_string(const Rational& q);

/// Exact square root when q is the square of a rational, nullopt otherwise.
std::optional<Rational> rat_sqrt(const Rational& q);

inline bool is_zero(const RatVec& v) {
  for (const Rational& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace qsh
