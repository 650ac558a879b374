#pragma once

// Elementary multiplicative functions and the classical Ramanujan sum.
//
// Supported range: arguments up to 10^12 (trial division up to 10^6).
// Larger inputs still work but factorization slows down; any result that
// leaves int64_t raises std::overflow_error.

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "ramlab/checked.hpp"

namespace ramlab {

struct PrimePower {
  i64 prime;
  int exponent;

  bool operator==(const PrimePower&) const = default;
};

/// Canonical prime-power decomposition. `factors` is sorted by prime and is
/// empty exactly when value == 1.
class Factorization {
 public:
  Factorization() = default;

  i64 value() const { return value_; }
  const std::vector<PrimePower>& factors() const& { return factors_; }
  // Keeps `for (auto pp : factorize(n).factors())` free of dangling refs.
  std::vector<PrimePower> factors() && { return std::move(factors_); }

  bool operator==(const Factorization&) const = default;

 private:
  friend Factorization factorize(i64 n);
  i64 value_ = 1;
  std::vector<PrimePower> factors_;
};

/// Throws std::invalid_argument for n < 1.
Factorization factorize(i64 n);

bool is_prime(i64 n);

/// Strictly increasing list of the positive divisors of n.
std::vector<i64> divisors(i64 n);
std::vector<i64> divisors(const Factorization& f);

i64 gcd(i64 a, i64 b);
i64 lcm(i64 a, i64 b);

i64 euler_phi(i64 n);
i64 sigma(i64 n);
i64 tau(i64 n);
int moebius(i64 n);

/// Dedekind psi: n * prod_{p|n} (1 + 1/p) = sum_{d|n} d |mu(n/d)|.
i64 dedekind_psi(i64 n);

/// Classical Ramanujan sum c(n, r), evaluated prime power by prime power:
/// c(n, p^a) is phi(p^a) when p^a | n, -p^(a-1) when p^(a-1) || n, else 0.
i64 ramanujan_c(i64 n, i64 r);

/// Direct O(r) exponential sum over the reduced residues mod r. Test oracle.
std::complex<double> ramanujan_c_oracle(i64 n, i64 r);

}  // namespace ramlab
