#pragma once

// Generalized Ramanujan sums c_A(n, r) =
//   sum over k mod r with (k, r)_A = 1 of exp(2 pi i k n / r).
//
// Two exact routes are kept side by side and must agree:
//   divisor form:  c_A(n, r) = sum_{d | n, d in A(r)} d * mu_A(r / d)
//   core form:     c_A(n, r) = sum_{d | r, gamma_A(r) | d} c(n, d)
// The exponential sum itself is only a floating-point test oracle.

#include <complex>
#include <utility>
#include <vector>

#include "ramlab/regular_system.hpp"
#include "ramlab/report.hpp"

namespace ramlab {

/// The divisor form with the per-modulus work hoisted: the pairs
/// (d, d * mu_A(r/d)) for d in A(r) with non-zero weight.
class CaDivisorForm {
 public:
  CaDivisorForm(const RegularSystem& system, i64 r);

  i64 modulus() const { return r_; }
  i64 operator()(i64 n) const;
  /// Sum over n <= x in O(|A(r)|): sum_{d in A(r)} d mu_A(r/d) floor(x/d).
  i64 partial_sum(i64 x) const;
  const std::vector<std::pair<i64, i64>>& terms() const { return terms_; }

 private:
  i64 r_;
  std::vector<std::pair<i64, i64>> terms_;
};

i64 c_A_divisor(const RegularSystem& system, i64 n, i64 r);
i64 c_A_core(const RegularSystem& system, i64 n, i64 r);
std::complex<double> c_A_oracle(const RegularSystem& system, i64 n, i64 r);

/// Exact partial sum of c_A(., r) up to x, main term delta_{r,1} x, and the
/// bound psi_A(r) on the residual.
PartialSumReport partial_sum_cA(const RegularSystem& system, i64 r, i64 x);

enum class CaRoute { Divisor, Core };

/// Dense table of c_A(n, r) for 1 <= n <= n_max, 1 <= r <= r_max.
struct CaTable {
  RegularSystem system;
  i64 n_max = 0;
  i64 r_max = 0;
  std::vector<i64> values;  // row-major by n

  i64 at(i64 n, i64 r) const { return values[static_cast<std::size_t>((n - 1) * r_max + (r - 1))]; }
};

}  // namespace ramlab
