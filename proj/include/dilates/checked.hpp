#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "dilates/error.hpp"

namespace dilates::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw RangeError("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw RangeError("integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw RangeError("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
  return r;
}

inline std::int64_t pow(std::int64_t base, unsigned exponent) {
  std::int64_t r = 1;
  for (unsigned i = 0; i < exponent; ++i) r = mul(r, base);
  return r;
}

inline std::int64_t abs(std::int64_t a) {
  if (a == INT64_MIN) throw RangeError("integer overflow in |" + std::to_string(a) + "|");
  return a < 0 ? -a : a;
}

/// Euclidean remainder in [0, m) for m >= 1.
inline std::int64_t residue(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace dilates::checked
