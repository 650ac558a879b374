#pragma once

// Brute-force reference implementations used only by tests. Each follows a
// definition directly and shares no code path with the routine it checks.

#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "ramlab/rational.hpp"
#include "ramlab/regular_system.hpp"

namespace oracle {

using i64 = std::int64_t;
using ramlab::Rational;

inline std::vector<i64> divisors(i64 n) {
  std::vector<i64> out;
  for (i64 d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline i64 phi(i64 n) {
  i64 c = 0;
  for (i64 k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++c;
  return c;
}

inline i64 sigma(i64 n) {
  i64 s = 0;
  for (i64 d : divisors(n)) s += d;
  return s;
}

// mu from sum_{d | n} mu(d) = [n == 1], built up over 1..n_max.
inline std::vector<int> mu_table(i64 n_max) {
  std::vector<int> mu(n_max + 1, 0);
  for (i64 n = 1; n <= n_max; ++n) {
    int acc = 0;
    for (i64 d = 1; d < n; ++d)
      if (n % d == 0) acc += mu[d];
    mu[n] = (n == 1 ? 1 : 0) - acc;
  }
  return mu;
}

inline std::vector<i64> unitary_divisors(i64 n) {
  std::vector<i64> out;
  for (i64 d : divisors(n))
    if (std::gcd(d, n / d) == 1) out.push_back(d);
  return out;
}

// Largest member of A(r) dividing k, by scanning A(r).
inline i64 gcd_A(const ramlab::RegularSystem& A, i64 k, i64 r) {
  if (k == 0) return r;
  i64 best = 1;
  for (i64 d : ramlab::divisor_set(A, r).members)
    if (k % d == 0) best = std::max(best, d);
  return best;
}

inline i64 phi_A(const ramlab::RegularSystem& A, i64 r) {
  i64 c = 0;
  for (i64 k = 1; k <= r; ++k)
    if (oracle::gcd_A(A, k, r) == 1) ++c;
  return c;
}

// Solves sum_{q | r} h(q) c(d, q) = f(d), d | r, by Gaussian elimination
// over the rationals. `c` is any callable giving c(n, q).
template <class C>
std::vector<Rational> solve_coefficients(i64 r, const std::vector<Rational>& f_on_divisors, C c) {
  const auto divs = divisors(r);
  const std::size_t m = divs.size();
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) a[i][j] = Rational(static_cast<long>(c(divs[i], divs[j])));
    a[i][m] = f_on_divisors[i];
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) throw std::runtime_error("singular system");
    std::swap(a[piv], a[col]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const Rational factor = a[i][col] / a[col][col];
      for (std::size_t j = col; j <= m; ++j) a[i][j] -= factor * a[col][j];
    }
  }
  std::vector<Rational> h(m);
  for (std::size_t i = 0; i < m; ++i) h[i] = a[i][m] / a[i][i];
  return h;
}

inline Rational random_rational(std::mt19937_64& rng, int num_span = 20, int den_max = 6) {
  std::uniform_int_distribution<int> num(-num_span, num_span), den(1, den_max);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace oracle
