#pragma once

// Overflow-checked 64-bit integer helpers. Every exact identity in the library
// is evaluated in int64_t; results that do not fit raise std::overflow_error
// instead of wrapping.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ramlab {

using i64 = std::int64_t;

inline i64 checked_add(i64 a, i64 b) {
  i64 out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("int64 overflow in " + std::to_string(a) + " + " + std::to_string(b));
  return out;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 out;
  if (__builtin_sub_overflow(a, b, &out))
    throw std::overflow_error("int64 overflow in " + std::to_string(a) + " - " + std::to_string(b));
  return out;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("int64 overflow in " + std::to_string(a) + " * " + std::to_string(b));
  return out;
}

inline i64 checked_pow(i64 base, int exp) {
  i64 out = 1;
  for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

}  // namespace ramlab
