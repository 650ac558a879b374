#include "ramlab/even_function.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace ramlab {
namespace {

Rational conj_value(const Rational& q) { return q; }
Complex conj_value(const Complex& z) { return std::conj(z); }

template <class T>
T from_int(i64 v);
template <>
Rational from_int<Rational>(i64 v) {
  return make_rational(v);
}
template <>
Complex from_int<Complex>(i64 v) {
  return Complex(static_cast<double>(v), 0.0);
}

bool same_value(const Rational& a, const Rational& b) { return a == b; }
bool same_value(const Complex& a, const Complex& b) {
  return std::abs(a - b) <= 1e-9 * (1.0 + std::max(std::abs(a), std::abs(b)));
}

std::size_t divisor_index(const std::vector<i64>& divs, i64 d) {
  auto it = std::lower_bound(divs.begin(), divs.end(), d);
  if (it == divs.end() || *it != d) throw std::invalid_argument(std::to_string(d) + " is not a divisor of the modulus");
  return static_cast<std::size_t>(it - divs.begin());
}

}  // namespace

template <class T>
EvenFunction<T>::EvenFunction(i64 r, std::vector<T> values)
    : r_(r), divisors_(ramlab::divisors(r)), values_(std::move(values)) {
  if (values_.size() != divisors_.size())
    throw std::invalid_argument("an " + std::to_string(r) + "-even function needs " +
                                std::to_string(divisors_.size()) + " divisor values, got " +
                                std::to_string(values_.size()));
}

template <class T>
EvenFunction<T> EvenFunction<T>::from_map(i64 r, const std::map<i64, T>& by_divisor) {
  const auto divs = ramlab::divisors(r);
  std::vector<T> values;
  values.reserve(divs.size());
  for (i64 d : divs) {
    auto it = by_divisor.find(d);
    if (it == by_divisor.end()) throw std::invalid_argument("missing value at divisor " + std::to_string(d));
    values.push_back(it->second);
  }
  if (by_divisor.size() != divs.size()) {
    for (const auto& entry : by_divisor)
      if (r % entry.first != 0 || entry.first < 1)
        throw std::invalid_argument(std::to_string(entry.first) + " is not a divisor of " + std::to_string(r));
  }
  return EvenFunction(r, std::move(values));
}

template <class T>
EvenFunction<T> EvenFunction<T>::tabulate(i64 r, const std::function<T(i64)>& at_divisor) {
  std::vector<T> values;
  for (i64 d : ramlab::divisors(r)) values.push_back(at_divisor(d));
  return EvenFunction(r, std::move(values));
}

template <class T>
EvenFunction<T> EvenFunction<T>::with_system(const RegularSystem& system) const {
  for (i64 d : divisors_) {
    const i64 ad = gcd_A(system, d, r_);
    if (!same_value(at_divisor(d), at_divisor(ad)))
      throw std::invalid_argument("function is not " + system.name() + "-even mod " + std::to_string(r_) +
                                  ": f(" + std::to_string(d) + ") != f(" + std::to_string(ad) + ")");
  }
  EvenFunction out = *this;
  out.system_ = system;
  return out;
}

template <class T>
const T& EvenFunction<T>::at_divisor(i64 d) const {
  return values_[divisor_index(divisors_, d)];
}

template <class T>
const T& FourierCoeffs<T>::at(i64 q) const {
  return h[divisor_index(divisors, q)];
}

template <class T>
T FourierCoeffs<T>::reconstruct(i64 n) const {
  T acc = from_int<T>(0);
  for (std::size_t i = 0; i < divisors.size(); ++i) acc += h[i] * from_int<T>(ramanujan_c(n, divisors[i]));
  return acc;
}

template <class T>
T inner_product(const EvenFunction<T>& f, const EvenFunction<T>& g) {
  if (f.modulus() != g.modulus())
    throw std::invalid_argument("inner product of functions with different moduli " + std::to_string(f.modulus()) +
                                " and " + std::to_string(g.modulus()));
  const i64 r = f.modulus();
  T acc = from_int<T>(0);
  for (i64 d : f.divisors()) acc += from_int<T>(euler_phi(d)) * f.at_divisor(r / d) * conj_value(g.at_divisor(r / d));
  return T(acc / from_int<T>(r));
}

template <class T>
FourierCoeffs<T> fourier_coeffs_by_projection(const EvenFunction<T>& f) {
  const i64 r = f.modulus();
  FourierCoeffs<T> out{r, f.divisors(), {}};
  for (i64 q : f.divisors()) {
    T acc = from_int<T>(0);
    for (i64 e : f.divisors())
      acc += from_int<T>(checked_mul(euler_phi(e), ramanujan_c(r / e, q))) * f.at_divisor(r / e);
    out.h.push_back(T(acc / from_int<T>(checked_mul(r, euler_phi(q)))));
  }
  return out;
}

template <class T>
FourierCoeffs<T> fourier_coeffs_by_dual_sum(const EvenFunction<T>& f) {
  const i64 r = f.modulus();
  FourierCoeffs<T> out{r, f.divisors(), {}};
  for (i64 q : f.divisors()) {
    T acc = from_int<T>(0);
    for (i64 e : f.divisors()) acc += f.at_divisor(r / e) * from_int<T>(ramanujan_c(r / q, e));
    out.h.push_back(T(acc / from_int<T>(r)));
  }
  return out;
}

template <class T>
FourierCoeffs<T> fourier_coeffs(const EvenFunction<T>& f) {
  auto first = fourier_coeffs_by_projection(f);
  const auto second = fourier_coeffs_by_dual_sum(f);
  for (std::size_t i = 0; i < first.h.size(); ++i)
    if (!same_value(first.h[i], second.h[i]))
      throw std::logic_error("Fourier coefficient formulas disagree at q = " + std::to_string(first.divisors[i]) +
                             " (modulus " + std::to_string(f.modulus()) + ")");
  return first;
}

template <class T>
T mean_value(const EvenFunction<T>& f) {
  const i64 r = f.modulus();
  T acc = from_int<T>(0);
  for (i64 e : f.divisors()) acc += f.at_divisor(e) * from_int<T>(euler_phi(r / e));
  return T(acc / from_int<T>(r));
}

Rational sup_norm(const EvenFunction<Rational>& f) {
  Rational best = 0;
  for (const auto& v : f.values()) best = std::max(best, rational_abs(v));
  return best;
}

Rational certified_bound(const EvenFunction<Rational>& f) {
  const i64 r = f.modulus();
  i64 psi_sum = 0;
  for (i64 q : f.divisors()) psi_sum = checked_add(psi_sum, dedekind_psi(q));
  Rational out = sup_norm(f) * make_rational(sigma(r), r) * make_rational(psi_sum);
  return out;
}

PartialSumReport partial_sum_even(const EvenFunction<Rational>& f, i64 x) {
  if (x < 1) throw std::invalid_argument("x must be >= 1");
  const auto coeffs = fourier_coeffs(f);
  Rational sum = 0;
  for (std::size_t i = 0; i < coeffs.divisors.size(); ++i) {
    const i64 q = coeffs.divisors[i];
    i64 inner = 0;
    for (i64 d : coeffs.divisors) {
      if (d > q) break;
      if (q % d != 0) continue;
      if (const int mu = moebius(q / d); mu != 0) inner = checked_add(inner, checked_mul(mu * d, x / d));
    }
    sum += coeffs.h[i] * make_rational(inner);
  }
  Rational main = mean_value(f) * make_rational(x);
  return PartialSumReport::make(x, std::move(sum), std::move(main), certified_bound(f));
}

EvenFunction<Rational> parse_even_function(std::string_view literal) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [&](std::string_view s, const char* what) {
    s = trim(s);
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument(std::string("bad ") + what + " '" + std::string(s) + "' in even-function literal");
    return static_cast<i64>(std::stoll(std::string(s)));
  };

  const auto semi = literal.find(';');
  if (semi == std::string_view::npos) throw std::invalid_argument("even-function literal needs 'r=<modulus>; ...'");
  const std::string_view head = trim(literal.substr(0, semi));
  if (head.size() < 2 || head[0] != 'r' || trim(head.substr(1)).front() != '=')
    throw std::invalid_argument("even-function literal must start with 'r=<modulus>;'");
  const i64 r = parse_int(trim(head.substr(1)).substr(1), "modulus");
  if (r < 1) throw std::invalid_argument("modulus must be >= 1");

  std::map<i64, Rational> values;
  std::string_view body = literal.substr(semi + 1);
  while (!trim(body).empty()) {
    const auto comma = body.find(',');
    const std::string_view item = body.substr(0, comma);
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos)
      throw std::invalid_argument("expected 'divisor:value', got '" + std::string(trim(item)) + "'");
    const i64 d = parse_int(item.substr(0, colon), "divisor");
    if (d < 1 || r % d != 0) throw std::invalid_argument(std::to_string(d) + " is not a divisor of " + std::to_string(r));
    if (!values.emplace(d, parse_rational(item.substr(colon + 1))).second)
      throw std::invalid_argument("divisor " + std::to_string(d) + " given twice");
  }
  return EvenFunction<Rational>::from_map(r, values);
}

std::string to_literal(const EvenFunction<Rational>& f) {
  std::string out = "r=" + std::to_string(f.modulus()) + ";";
  for (std::size_t i = 0; i < f.divisors().size(); ++i)
    out += (i == 0 ? " " : ", ") + std::to_string(f.divisors()[i]) + ":" + to_string(f.values()[i]);
  return out;
}

i64 maxsein_phi(i64 s, i64 d, i64 n) {
  if (s < 1 || d < 1 || n < 1) throw std::invalid_argument("maxsein_phi: s, d, n must be >= 1");
  if (gcd(s, d) != 1)
    throw std::invalid_argument("maxsein_phi: gcd(s, d) must be 1, got gcd(" + std::to_string(s) + ", " +
                                std::to_string(d) + ") = " + std::to_string(gcd(s, d)));
  i64 count = 0;
  const i64 dn = d % n;
  i64 term = s % n;  // s + (k-1) d mod n
  for (i64 k = 1; k <= n; ++k) {
    if (gcd(term, n) == 1) ++count;
    term = (term + dn) % n;
  }
  return count;
}

i64 maxsein_phi_extended(i64 s, i64 d, i64 n) {
  if (s < 1 || d < 1 || n < 1) throw std::invalid_argument("maxsein_phi: s, d, n must be >= 1");
  // The count only depends on d mod n; gcd(s, d + j n) = 1 is solvable iff it
  // is solvable for some j < s.
  for (i64 j = 0; j < s; ++j) {
    const i64 shifted = checked_add(d, checked_mul(j, n));
    if (gcd(s, shifted) == 1) return maxsein_phi(s, shifted, n);
  }
  return maxsein_phi(1, d, n);
}

Rational maxsein_mean(i64 s, i64 n) {
  if (s < 1 || n < 1) throw std::invalid_argument("maxsein_mean: s, n must be >= 1");
  Rational out = make_rational(n);
  for (const auto& pp : factorize(n).factors()) {
    const i64 p = pp.prime;
    out *= make_rational(checked_add(checked_sub(checked_mul(p, p), p), 1), checked_mul(p, p));
  }
  return out;
}

EvenFunction<Rational> maxsein_even_function(i64 s, i64 n) {
  return EvenFunction<Rational>::tabulate(n, [&](i64 e) { return make_rational(maxsein_phi_extended(s, e, n)); });
}

template class EvenFunction<Rational>;
template class EvenFunction<Complex>;
template struct FourierCoeffs<Rational>;
template struct FourierCoeffs<Complex>;

template Rational inner_product(const EvenFunction<Rational>&, const EvenFunction<Rational>&);
template Complex inner_product(const EvenFunction<Complex>&, const EvenFunction<Complex>&);
template FourierCoeffs<Rational> fourier_coeffs_by_projection(const EvenFunction<Rational>&);
template FourierCoeffs<Complex> fourier_coeffs_by_projection(const EvenFunction<Complex>&);
template FourierCoeffs<Rational> fourier_coeffs_by_dual_sum(const EvenFunction<Rational>&);
template FourierCoeffs<Complex> fourier_coeffs_by_dual_sum(const EvenFunction<Complex>&);
template FourierCoeffs<Rational> fourier_coeffs(const EvenFunction<Rational>&);
template FourierCoeffs<Complex> fourier_coeffs(const EvenFunction<Complex>&);
template Rational mean_value(const EvenFunction<Rational>&);
template Complex mean_value(const EvenFunction<Complex>&);

}  // namespace ramlab
