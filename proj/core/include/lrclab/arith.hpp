#pragma once

#include <cstdint>

#include <boost/rational.hpp>

#include "lrclab/error.hpp"

namespace lrclab {

using Rational = boost::rational<std::int64_t>;

[[nodiscard]] constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  if (b == 0) fail(Errc::RangeError, "division by zero");
  std::int64_t qt = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --qt;
  return qt;
}

[[nodiscard]] constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

/// Principal remainder [x mod m], in 0..m-1.
[[nodiscard]] constexpr std::int64_t mod_principal(std::int64_t x, std::int64_t m) {
  if (m <= 0) fail(Errc::RangeError, "modulus must be positive");
  return x - m * floor_div(x, m);
}

/// Shifted remainder {x mod m}, in 1..m (a multiple of m maps to m).
[[nodiscard]] constexpr std::int64_t mod_brace(std::int64_t x, std::int64_t m) {
  const std::int64_t r = mod_principal(x, m);
  return r == 0 ? m : r;
}

[[nodiscard]] inline std::int64_t floor_of(const Rational& x) { return floor_div(x.numerator(), x.denominator()); }
[[nodiscard]] inline std::int64_t ceil_of(const Rational& x) { return ceil_div(x.numerator(), x.denominator()); }

}  // namespace lrclab
