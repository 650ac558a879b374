#pragma once

// Exact rationals backed by GMP. Text form is "p" or "p/q" in lowest terms.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace ramlab {

using Rational = mpq_class;

/// Parses "p", "-p", "p/q" (q != 0). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical "p" or "p/q" text.
std::string to_string(const Rational& q);

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 target expected");
  Rational q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace ramlab
