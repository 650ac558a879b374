#include "ramlab/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ramlab {
namespace {

constexpr i64 kSieveLimit = 1'000'000;

const std::vector<i64>& small_primes() {
  static const std::vector<i64> primes = [] {
    std::vector<bool> composite(kSieveLimit + 1, false);
    std::vector<i64> out;
    for (i64 i = 2; i <= kSieveLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (i64 j = i * i; j <= kSieveLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

void require_positive(i64 n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": argument must be >= 1, got " + std::to_string(n));
}

}  // namespace

Factorization factorize(i64 n) {
  require_positive(n, "factorize");
  Factorization out;
  out.value_ = n;
  i64 rest = n;
  auto strip = [&](i64 p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) out.factors_.push_back({p, e});
  };
  for (i64 p : small_primes()) {
    if (p > rest / p) break;
    strip(p);
  }
  // Past the table: plain odd trial division.
  for (i64 p = small_primes().back() + 2; p <= rest / p; p += 2) strip(p);
  if (rest > 1) out.factors_.push_back({rest, 1});
  return out;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  const auto f = factorize(n);
  return f.factors().size() == 1 && f.factors()[0].exponent == 1;
}

std::vector<i64> divisors(const Factorization& f) {
  std::vector<i64> out{1};
  for (const auto& [p, a] : f.factors()) {
    const std::size_t base = out.size();
    i64 pk = 1;
    for (int k = 1; k <= a; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<i64> divisors(i64 n) { return divisors(factorize(n)); }

i64 gcd(i64 a, i64 b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i64 lcm(i64 a, i64 b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / gcd(a, b), b);
}

i64 euler_phi(i64 n) {
  i64 out = 1;
  for (const auto& [p, a] : factorize(n).factors()) out *= checked_pow(p, a - 1) * (p - 1);
  return out;
}

i64 sigma(i64 n) {
  i64 out = 1;
  for (const auto& [p, a] : factorize(n).factors()) {
    i64 term = 1, pk = 1;
    for (int k = 1; k <= a; ++k) {
      pk = checked_mul(pk, p);
      term = checked_add(term, pk);
    }
    out = checked_mul(out, term);
  }
  return out;
}

i64 tau(i64 n) {
  i64 out = 1;
  for (const auto& pp : factorize(n).factors()) out *= pp.exponent + 1;
  return out;
}

int moebius(i64 n) {
  const auto f = factorize(n);
  for (const auto& pp : f.factors())
    if (pp.exponent > 1) return 0;
  return f.factors().size() % 2 == 0 ? 1 : -1;
}

i64 dedekind_psi(i64 n) {
  i64 out = 1;
  for (const auto& [p, a] : factorize(n).factors())
    out = checked_mul(out, checked_mul(checked_pow(p, a - 1), p + 1));
  return out;
}

i64 ramanujan_c(i64 n, i64 r) {
  require_positive(n, "ramanujan_c");
  require_positive(r, "ramanujan_c");
  i64 out = 1;
  for (const auto& [p, a] : factorize(r).factors()) {
    const i64 below = checked_pow(p, a - 1);
    if (n % below != 0) return 0;
    const i64 full = below * p;
    out = checked_mul(out, n % full == 0 ? full - below : -below);
  }
  return out;
}

std::complex<double> ramanujan_c_oracle(i64 n, i64 r) {
  require_positive(n, "ramanujan_c_oracle");
  require_positive(r, "ramanujan_c_oracle");
  std::complex<double> sum{0.0, 0.0};
  const i64 nr = n % r;
  for (i64 k = 1; k <= r; ++k) {
    if (gcd(k, r) != 1) continue;
    const auto phase = static_cast<i64>((static_cast<__int128>(k) * nr) % r);
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(r);
    sum += std::polar(1.0, theta);
  }
  return sum;
}

}  // namespace ramlab
