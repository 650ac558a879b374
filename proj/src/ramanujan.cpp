#include "ramlab/ramanujan.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ramlab {
namespace {

void require_positive(i64 v, const char* what) {
  if (v < 1) throw std::invalid_argument(std::string(what) + " must be >= 1, got " + std::to_string(v));
}

}  // namespace

CaDivisorForm::CaDivisorForm(const RegularSystem& system, i64 r) : r_(r) {
  require_positive(r, "modulus r");
  for (i64 d : divisor_set(system, r).members) {
    const int mu = mu_A(system, r / d);
    if (mu != 0) terms_.emplace_back(d, mu * d);
  }
}

i64 CaDivisorForm::operator()(i64 n) const {
  require_positive(n, "n");
  i64 out = 0;
  for (const auto& [d, weight] : terms_)
    if (n % d == 0) out += weight;
  return out;
}

i64 CaDivisorForm::partial_sum(i64 x) const {
  require_positive(x, "x");
  i64 out = 0;
  for (const auto& [d, weight] : terms_) out = checked_add(out, checked_mul(weight, x / d));
  return out;
}

i64 c_A_divisor(const RegularSystem& system, i64 n, i64 r) { return CaDivisorForm(system, r)(n); }

i64 c_A_core(const RegularSystem& system, i64 n, i64 r) {
  require_positive(n, "n");
  const i64 core = gamma_A(system, r);
  i64 out = 0;
  for (i64 d : divisors(r))
    if (d % core == 0) out = checked_add(out, ramanujan_c(n, d));
  return out;
}

std::complex<double> c_A_oracle(const RegularSystem& system, i64 n, i64 r) {
  require_positive(n, "n");
  require_positive(r, "modulus r");
  std::complex<double> sum{0.0, 0.0};
  const i64 nr = n % r;
  // k runs over 0..r-1; k = 0 has (0, r)_A = r, which is 1 only for r = 1.
  for (i64 k = 0; k < r; ++k) {
    if (gcd_A(system, k, r) != 1) continue;
    const auto phase = static_cast<i64>((static_cast<__int128>(k) * nr) % r);
    sum += std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(r));
  }
  return sum;
}

PartialSumReport partial_sum_cA(const RegularSystem& system, i64 r, i64 x) {
  const CaDivisorForm form(system, r);
  return PartialSumReport::make(x, make_rational(form.partial_sum(x)), make_rational(r == 1 ? x : 0),
                                make_rational(psi_A(system, r)));
}

}  // namespace ramlab
