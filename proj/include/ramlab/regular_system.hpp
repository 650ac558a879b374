#pragma once

// Regular systems of divisors. A system A assigns each n a set A(n) of
// divisors; it is regular iff it is built multiplicatively over coprime parts
// and, for each prime power p^a, A(p^a) = {1, p^t, p^2t, ..., p^a} where the
// type t = t_A(p^a) divides a and the chain A(p^it) has type t for i <= a/t.

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ramlab/arith.hpp"

namespace ramlab {

class RegularSystem {
 public:
  enum class Kind { Dirichlet, Unitary, Custom };
  enum class DefaultRule { Dirichlet, Unitary };
  // (prime, exponent) -> type
  using TypeTable = std::map<std::pair<i64, int>, int>;

  static constexpr int kDefaultAMax = 16;

  static RegularSystem dirichlet();
  static RegularSystem unitary();
  /// Unitary at p = 2, Dirichlet elsewhere.
  static RegularSystem mix();
  /// Validates and throws InvalidSystemError on any violation.
  static RegularSystem custom(DefaultRule rule, int a_max, TypeTable types, std::string name = "custom");
  /// No validation; for feeding validate() and for tests of it.
  static RegularSystem custom_unchecked(DefaultRule rule, int a_max, TypeTable types, std::string name = "custom");

  Kind kind() const { return kind_; }
  DefaultRule default_rule() const { return default_; }
  int a_max() const { return a_max_; }
  const TypeTable& types() const { return types_; }
  const std::string& name() const { return name_; }

  /// True when some table entry names this prime.
  bool lists_prime(i64 p) const;

  /// t_A(p^a). For a prime listed in a custom table, exponents above a_max
  /// are out of scope and raise std::out_of_range naming the prime power.
  int type(i64 p, int a) const;

  /// True iff t_A(p^a) == 1 for every prime power in scope.
  bool is_dirichlet() const;

 private:
  RegularSystem(Kind kind, DefaultRule rule, int a_max, TypeTable types, std::string name)
      : kind_(kind), default_(rule), a_max_(a_max), types_(std::move(types)), name_(std::move(name)) {}

  Kind kind_;
  DefaultRule default_;
  int a_max_;
  TypeTable types_;
  std::string name_;
};

struct Violation {
  i64 prime;
  int exponent;
  std::string message;
};

/// Complete list of violations of the divisibility and chain rules; empty
/// means the system is regular over its declared scope.
std::vector<Violation> validate(const RegularSystem& system);

class InvalidSystemError : public std::runtime_error {
 public:
  explicit InvalidSystemError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Parses the JSON system spec:
///   { "kind": "custom", "default": "dirichlet-default", "a_max": 16,
///     "types": [{"p": 2, "a": 4, "t": 2}, ...] }
/// "kind" may also be "dirichlet" or "unitary". Malformed JSON raises
/// std::invalid_argument, an irregular table raises InvalidSystemError.
RegularSystem parse_system_spec(std::string_view json_text);
RegularSystem load_system_spec(const std::string& path);

struct DivisorSetA {
  i64 n;
  std::vector<i64> members;  // increasing
};

DivisorSetA divisor_set(const RegularSystem& system, i64 n);

/// d in A(n).
bool in_divisor_set(const RegularSystem& system, i64 d, i64 n);

/// (k, r)_A: the largest element of A(r) dividing k; (0, r)_A = r.
i64 gcd_A(const RegularSystem& system, i64 k, i64 r);

/// (f *_A g)(n) for n = 1..N, where f and g are indexed by n (slot 0 unused)
/// and N = f.size() - 1. Output uses the same layout.
std::vector<i64> convolve_A(const RegularSystem& system, std::span<const i64> f, std::span<const i64> g);

int mu_A(const RegularSystem& system, i64 n);
i64 phi_A(const RegularSystem& system, i64 r);
i64 gamma_A(const RegularSystem& system, i64 r);
i64 psi_A(const RegularSystem& system, i64 r);

}  // namespace ramlab
