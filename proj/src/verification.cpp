#include "ramlab/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ramlab/kernels.hpp"

namespace ramlab {

i64 mean_product_exact(const RegularSystem& system, i64 r, i64 s) {
  const i64 core_r = gamma_A(system, r);
  const i64 core_s = gamma_A(system, s);
  i64 out = 0;
  for (i64 d : divisors(gcd(r, s)))
    if (d % core_r == 0 && d % core_s == 0) out = checked_add(out, euler_phi(d));
  return out;
}

Rational mean_product_empirical(const RegularSystem& system, i64 r, i64 s, i64 x) {
  return make_rational(kernels::ca_product_sum_parallel(system, r, s, x), x);
}

OrthogonalityReport orthogonality_report(const RegularSystem& system, i64 r, i64 s, i64 periods) {
  if (periods < 1) throw std::invalid_argument("periods must be >= 1");
  OrthogonalityReport rep;
  rep.system = system.name();
  rep.r = r;
  rep.s = s;
  rep.exact_mean = mean_product_exact(system, r, s);
  rep.empirical_mean = mean_product_empirical(system, r, s, checked_mul(lcm(r, s), periods));
  if (rep.empirical_mean != make_rational(rep.exact_mean))
    throw CrossCheckError("product mean of c_A(., " + std::to_string(r) + ") and c_A(., " + std::to_string(s) +
                          "): exact " + std::to_string(rep.exact_mean) + " but period average " +
                          to_string(rep.empirical_mean));
  if (r == s)
    rep.verdict = Verdict::Diagonal;
  else
    rep.verdict = rep.exact_mean == 0 ? Verdict::Orthogonal : Verdict::Violating;
  return rep;
}

std::optional<OrthogonalityViolation> find_orthogonality_violation(const RegularSystem& system, i64 search_bound) {
  for (i64 total = 3; total <= 2 * search_bound; ++total) {
    for (i64 r = std::max<i64>(1, total - search_bound); r <= std::min(search_bound, total - 1); ++r) {
      const i64 s = total - r;
      if (r == s) continue;
      if (const i64 m = mean_product_exact(system, r, s); m != 0) return OrthogonalityViolation{r, s, m};
    }
  }
  return std::nullopt;
}

std::optional<i64> A_evenness_counterexample(const RegularSystem& system, const std::function<i64(i64)>& h, i64 r,
                                             i64 n_max) {
  if (n_max < r) throw std::invalid_argument("is_A_even: range must reach the modulus");
  for (i64 n = 1; n <= n_max; ++n)
    if (h(n) != h(gcd_A(system, n, r))) return n;
  return std::nullopt;
}

bool is_A_even(const RegularSystem& system, const std::function<i64(i64)>& h, i64 r, i64 n_max) {
  return !A_evenness_counterexample(system, h, r, n_max).has_value();
}

i64 Prop4Witness::f(const RegularSystem& system, i64 n) const { return gcd_A(system, n, prime); }

i64 Prop4Witness::g(const RegularSystem& system, i64 n) const {
  return gcd_A(system, n, checked_pow(prime, type));
}

bool Prop4Witness::certified() const {
  return f_even && g_even && p_outside_A_of_pt && static_cast<i64>(failures.size()) == r_max;
}

std::optional<PrimePower> first_nontrivial_type(const RegularSystem& system) {
  switch (system.kind()) {
    case RegularSystem::Kind::Dirichlet:
      return std::nullopt;
    case RegularSystem::Kind::Unitary:
      return PrimePower{2, 2};
    case RegularSystem::Kind::Custom:
      break;
  }
  std::optional<PrimePower> best;
  long double best_value = 0;
  auto consider = [&](i64 p, int a) {
    const long double value = std::pow(static_cast<long double>(p), a);
    if (system.type(p, a) > 1 && (!best || value < best_value)) {
      best = PrimePower{p, a};
      best_value = value;
    }
  };
  i64 listed_prime = 0;
  for (const auto& [key, t] : system.types()) {
    if (key.first == listed_prime) continue;
    listed_prime = key.first;
    for (int a = 2; a <= system.a_max(); ++a) consider(key.first, a);
  }
  if (system.default_rule() == RegularSystem::DefaultRule::Unitary) {
    for (i64 p = 2;; ++p) {
      if (!is_prime(p) || system.lists_prime(p)) continue;
      consider(p, 2);
      break;
    }
  }
  return best;
}

std::optional<Prop4Witness> prop4_witness(const RegularSystem& system, i64 r_max) {
  const auto pa = first_nontrivial_type(system);
  if (!pa) return std::nullopt;

  Prop4Witness w;
  w.prime = pa->prime;
  w.exponent = pa->exponent;
  w.type = system.type(pa->prime, pa->exponent);
  w.r_max = r_max;
  const i64 p = w.prime;
  const i64 pt = checked_pow(p, w.type);

  auto f = [&](i64 n) { return w.f(system, n); };
  auto g = [&](i64 n) { return w.g(system, n); };
  auto h = [&](i64 n) { return w.h(system, n); };

  w.f_even = is_A_even(system, f, p, 4 * pt);
  w.g_even = is_A_even(system, g, pt, 4 * pt);
  for (i64 r = 1; r <= r_max; ++r)
    if (auto n = A_evenness_counterexample(system, h, r, 4 * lcm(r, pt))) w.failures.emplace_back(r, *n);
  w.p_outside_A_of_pt = !in_divisor_set(system, p, pt);
  return w;
}

std::vector<double> expansion_terms(i64 n, i64 terms) {
  if (n < 1 || terms < 1) throw std::invalid_argument("expansion: n and the term count must be >= 1");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(terms));
  for (i64 r = 1; r <= terms; ++r) {
    const double rr = static_cast<double>(r);
    out.push_back(static_cast<double>(ramanujan_c(n, r)) / (rr * rr));
  }
  return out;
}

ExpansionResult expansion_demo(i64 n, i64 terms) {
  const auto t = expansion_terms(n, terms);
  // Sum smallest terms first to keep the rounding error well below the tail.
  long double acc = 0;
  for (auto it = t.rbegin(); it != t.rend(); ++it) acc += *it;
  const double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
  ExpansionResult out;
  out.n = n;
  out.terms = terms;
  out.truncated = static_cast<double>(static_cast<long double>(zeta2) * acc);
  out.target = static_cast<double>(sigma(n)) / static_cast<double>(n);
  out.abs_error = std::abs(out.truncated - out.target);
  return out;
}

std::vector<PartialSumReport> prop1_check(const EvenFunction<Rational>& f, std::span<const i64> xs) {
  std::vector<i64> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  const Rational mean = mean_value(f);
  const Rational bound = certified_bound(f);

  std::vector<PartialSumReport> out;
  Rational running = 0;
  i64 n = 0;
  std::map<i64, Rational> brute;
  for (i64 x : sorted) {
    if (x < 1) throw std::invalid_argument("x must be >= 1");
    while (n < x) running += f(++n);
    brute[x] = running;
  }
  for (i64 x : xs) {
    const Rational& sum = brute.at(x);
    const auto closed = partial_sum_even(f, x);
    if (closed.exact_sum != sum)
      throw CrossCheckError("partial sum of " + to_literal(f) + " up to " + std::to_string(x) + ": loop gives " +
                            to_string(sum) + ", Fourier route gives " + to_string(closed.exact_sum));
    out.push_back(PartialSumReport::make(x, sum, mean * make_rational(x), bound));
  }
  return out;
}

std::vector<std::vector<PartialSumReport>> prop2_check(const RegularSystem& system, i64 r_max,
                                                       std::span<const i64> xs) {
  if (xs.empty()) return std::vector<std::vector<PartialSumReport>>(static_cast<std::size_t>(r_max));
  const i64 x_max = *std::max_element(xs.begin(), xs.end());
  const auto prefix = kernels::ca_prefix_sums_parallel(system, r_max, x_max);

  std::vector<std::vector<PartialSumReport>> out(static_cast<std::size_t>(r_max));
  for (i64 r = 1; r <= r_max; ++r) {
    const CaDivisorForm form(system, r);
    const Rational bound = make_rational(psi_A(system, r));
    for (i64 x : xs) {
      if (x < 1) throw std::invalid_argument("x must be >= 1");
      const i64 brute = prefix[r - 1][x - 1];
      if (const i64 closed = form.partial_sum(x); closed != brute)
        throw CrossCheckError("sum of c_A(n, " + std::to_string(r) + ") over n <= " + std::to_string(x) +
                              ": loop gives " + std::to_string(brute) + ", closed form gives " +
                              std::to_string(closed));
      out[r - 1].push_back(
          PartialSumReport::make(x, make_rational(brute), make_rational(r == 1 ? x : 0), bound));
    }
  }
  return out;
}

}  // namespace ramlab
