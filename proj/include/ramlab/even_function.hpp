#pragma once

// r-even functions: f(n) = f(gcd(n, r)). The space E_r has dimension tau(r),
// the inner product
//   <f, g> = (1/r) sum_{d | r} phi(d) f(r/d) conj(g(r/d)),
// and the classical Ramanujan sums c(., q), q | r, as an orthogonal basis with
// <c(., q), c(., q)> = phi(q).
//
// Value types: Rational (exact) and std::complex<double>.

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramlab/arith.hpp"
#include "ramlab/rational.hpp"
#include "ramlab/regular_system.hpp"
#include "ramlab/report.hpp"

namespace ramlab {

using Complex = std::complex<double>;

template <class T>
class EvenFunction {
 public:
  /// `values[i]` is the value at the i-th divisor of r in increasing order.
  EvenFunction(i64 r, std::vector<T> values);

  static EvenFunction from_map(i64 r, const std::map<i64, T>& by_divisor);
  static EvenFunction tabulate(i64 r, const std::function<T(i64)>& at_divisor);

  /// Tags the function as A-even (mod r); throws std::invalid_argument if
  /// some divisor d has f(d) != f((d, r)_A).
  EvenFunction with_system(const RegularSystem& system) const;

  i64 modulus() const { return r_; }
  const std::vector<i64>& divisors() const { return divisors_; }
  const std::vector<T>& values() const { return values_; }
  const std::optional<RegularSystem>& system() const { return system_; }

  const T& at_divisor(i64 d) const;
  /// f(n) = f(gcd(n, r)).
  const T& operator()(i64 n) const { return at_divisor(gcd(n, r_)); }

 private:
  i64 r_;
  std::vector<i64> divisors_;
  std::vector<T> values_;
  std::optional<RegularSystem> system_;
};

/// Coefficients h(q), q | r, of f = sum_{q | r} h(q) c(., q).
template <class T>
struct FourierCoeffs {
  i64 r;
  std::vector<i64> divisors;
  std::vector<T> h;

  const T& at(i64 q) const;
  /// sum_{q | r} h(q) c(n, q).
  T reconstruct(i64 n) const;
};

template <class T>
T inner_product(const EvenFunction<T>& f, const EvenFunction<T>& g);

/// h(q) = (1 / (r phi(q))) sum_{e | r} phi(e) f(r/e) c(r/e, q)
template <class T>
FourierCoeffs<T> fourier_coeffs_by_projection(const EvenFunction<T>& f);

/// h(q) = (1/r) sum_{e | r} f(r/e) c(r/q, e)
template <class T>
FourierCoeffs<T> fourier_coeffs_by_dual_sum(const EvenFunction<T>& f);

/// Both formulas; throws std::logic_error if they disagree (exactly for
/// Rational, beyond 1e-9 relative for Complex).
template <class T>
FourierCoeffs<T> fourier_coeffs(const EvenFunction<T>& f);

/// M(f) = (1/r) sum_{e | r} f(e) phi(r/e).
template <class T>
T mean_value(const EvenFunction<T>& f);

/// Uniform bound K_f = max_{d | r} |f(d)|.
Rational sup_norm(const EvenFunction<Rational>& f);

/// K_f (sigma(r)/r) sum_{q | r} psi(q), with psi the Dedekind function. It
/// bounds |sum_{n <= x} f(n) - M(f) x| for every x >= 1.
Rational certified_bound(const EvenFunction<Rational>& f);

/// Exact partial sum through the Fourier decomposition: each inner sum
/// sum_{n <= x} c(n, q) = sum_{d | q} d mu(q/d) floor(x/d) is closed form,
/// so the cost is independent of x.
PartialSumReport partial_sum_even(const EvenFunction<Rational>& f, i64 x);

/// Literal form: "r=12; 1:1, 2:-1, 3:0, 4:2, 6:0, 12:5" (values may be p/q).
/// Every divisor of r must appear exactly once.
EvenFunction<Rational> parse_even_function(std::string_view literal);
std::string to_literal(const EvenFunction<Rational>& f);

/// #{k in [1, n] : gcd(s + (k-1) d, n) = 1}; requires gcd(s, d) = 1.
i64 maxsein_phi(i64 s, i64 d, i64 n);

/// n prod_{p | n} (1 - 1/p + 1/p^2).
Rational maxsein_mean(i64 s, i64 n);

/// The n-even function d -> phi(s, d, n). At a divisor e of n the value is
/// counted at the least d = e + j n with gcd(s, d) = 1; when no such d exists
/// (some prime divides s, e and n) it takes the value phi(1, e, n), which is
/// what phi(s, d, n) equals whenever gcd(s, d) = 1.
EvenFunction<Rational> maxsein_even_function(i64 s, i64 n);

/// phi(s, d, n) extended to every d in the same way as maxsein_even_function.
i64 maxsein_phi_extended(i64 s, i64 d, i64 n);

extern template class EvenFunction<Rational>;
extern template class EvenFunction<Complex>;
extern template struct FourierCoeffs<Rational>;
extern template struct FourierCoeffs<Complex>;

}  // namespace ramlab
