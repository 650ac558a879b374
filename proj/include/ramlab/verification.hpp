#pragma once

// Executable checks of the mean-value and orthogonality results for
// r-even functions and generalized Ramanujan sums. Each checker evaluates
// the claimed closed form and an independent brute-force route.

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ramlab/even_function.hpp"
#include "ramlab/ramanujan.hpp"
#include "ramlab/report.hpp"

namespace ramlab {

/// Two routes that must agree did not. Always a library bug.
class CrossCheckError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// M(c_A(., r) c_A(., s)) = sum of phi(d) over d | gcd(r, s) with
/// gamma_A(r) | d and gamma_A(s) | d.
i64 mean_product_exact(const RegularSystem& system, i64 r, i64 s);

/// (1/x) sum_{n <= x} c_A(n, r) c_A(n, s). Equals the exact mean whenever
/// lcm(r, s) divides x.
Rational mean_product_empirical(const RegularSystem& system, i64 r, i64 s, i64 x);

/// Exact mean, period average over `periods` multiples of lcm(r, s), and
/// verdict. Throws CrossCheckError if the two means differ.
OrthogonalityReport orthogonality_report(const RegularSystem& system, i64 r, i64 s, i64 periods = 1);

struct OrthogonalityViolation {
  i64 r;
  i64 s;
  i64 mean;

  bool operator==(const OrthogonalityViolation&) const = default;
};

/// First pair r != s, both <= search_bound, ordered by r + s then r, whose
/// product mean is non-zero.
std::optional<OrthogonalityViolation> find_orthogonality_violation(const RegularSystem& system, i64 search_bound);

/// h(n) == h((n, r)_A) for every n <= n_max. Requires n_max >= r.
bool is_A_even(const RegularSystem& system, const std::function<i64(i64)>& h, i64 r, i64 n_max);

/// Least n <= n_max with h(n) != h((n, r)_A), if any.
std::optional<i64> A_evenness_counterexample(const RegularSystem& system, const std::function<i64(i64)>& h, i64 r,
                                             i64 n_max);

struct Prop4Witness {
  i64 prime = 0;
  int exponent = 0;  // a with t_A(p^a) = type > 1
  int type = 0;
  i64 r_max = 0;
  bool f_even = false;  // f = (., p)_A is A-even mod p
  bool g_even = false;  // g = (., p^t)_A is A-even mod p^t
  // (r, n): h(n) != h((n, r)_A) with n <= 4 lcm(r, p^t); one entry per r.
  std::vector<std::pair<i64, i64>> failures;
  bool p_outside_A_of_pt = false;  // p not in A(p^t)

  i64 f(const RegularSystem& system, i64 n) const;
  i64 g(const RegularSystem& system, i64 n) const;
  i64 h(const RegularSystem& system, i64 n) const { return f(system, n) + g(system, n); }

  /// f and g are A-even, h fails for every r <= r_max, and p is not in A(p^t).
  bool certified() const;
};

/// Sum f + g of two A-even functions that is A-even for no r <= r_max.
/// std::nullopt when A is the Dirichlet system (no prime power of type > 1).
std::optional<Prop4Witness> prop4_witness(const RegularSystem& system, i64 r_max = 100);

/// Smallest prime power p^a (by value) with t_A(p^a) > 1, if any is in scope.
std::optional<PrimePower> first_nontrivial_type(const RegularSystem& system);

struct ExpansionResult {
  i64 n;
  i64 terms;
  double truncated;
  double target;  // sigma(n) / n
  double abs_error;
};

/// (pi^2/6) sum_{r <= R} c(n, r) / r^2 against sigma(n)/n.
ExpansionResult expansion_demo(i64 n, i64 terms);

/// The individual terms c(n, r) / r^2, r = 1..R, before the pi^2/6 factor.
std::vector<double> expansion_terms(i64 n, i64 terms);

/// Partial-sum reports with the exact sum taken from a plain loop over
/// n <= x. Throws CrossCheckError if the closed-form sum disagrees.
std::vector<PartialSumReport> prop1_check(const EvenFunction<Rational>& f, std::span<const i64> xs);

/// Reports for sum_{n <= x} c_A(n, r) at each x, with the exact sum from the
/// brute prefix-sum kernel; rows indexed by r - 1. Throws CrossCheckError if
/// a brute sum disagrees with the closed form over A(r).
std::vector<std::vector<PartialSumReport>> prop2_check(const RegularSystem& system, i64 r_max,
                                                       std::span<const i64> xs);

}  // namespace ramlab
