#include "ramlab/regular_system.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ramlab {

RegularSystem RegularSystem::dirichlet() { return {Kind::Dirichlet, DefaultRule::Dirichlet, kDefaultAMax, {}, "D"}; }

RegularSystem RegularSystem::unitary() { return {Kind::Unitary, DefaultRule::Unitary, kDefaultAMax, {}, "U"}; }

RegularSystem RegularSystem::mix() {
  // a_max = 62 keeps every power of two that fits in int64 in scope.
  constexpr int kMixAMax = 62;
  TypeTable types;
  for (int a = 1; a <= kMixAMax; ++a) types[{2, a}] = a;
  return custom(DefaultRule::Dirichlet, kMixAMax, std::move(types), "MIX");
}

RegularSystem RegularSystem::custom(DefaultRule rule, int a_max, TypeTable types, std::string name) {
  RegularSystem out = custom_unchecked(rule, a_max, std::move(types), std::move(name));
  auto violations = validate(out);
  if (!violations.empty()) throw InvalidSystemError(std::move(violations));
  return out;
}

RegularSystem RegularSystem::custom_unchecked(DefaultRule rule, int a_max, TypeTable types, std::string name) {
  return {Kind::Custom, rule, a_max, std::move(types), std::move(name)};
}

bool RegularSystem::lists_prime(i64 p) const {
  auto it = types_.lower_bound({p, 0});
  return it != types_.end() && it->first.first == p;
}

int RegularSystem::type(i64 p, int a) const {
  switch (kind_) {
    case Kind::Dirichlet:
      return 1;
    case Kind::Unitary:
      return a;
    case Kind::Custom:
      break;
  }
  if (auto it = types_.find({p, a}); it != types_.end()) return it->second;
  if (a > a_max_ && lists_prime(p))
    throw std::out_of_range("prime power " + std::to_string(p) + "^" + std::to_string(a) + " exceeds a_max = " +
                            std::to_string(a_max_) + " of system " + name_);
  return default_ == DefaultRule::Dirichlet ? 1 : a;
}

bool RegularSystem::is_dirichlet() const {
  if (kind_ != Kind::Custom) return kind_ == Kind::Dirichlet;
  if (default_ != DefaultRule::Dirichlet) return false;
  return std::all_of(types_.begin(), types_.end(), [](const auto& e) { return e.second == 1; });
}

std::vector<Violation> validate(const RegularSystem& system) {
  std::vector<Violation> out;
  if (system.kind() != RegularSystem::Kind::Custom) return out;

  auto pp = [](i64 p, int a) { return std::to_string(p) + "^" + std::to_string(a); };

  if (system.a_max() < 1) out.push_back({0, 0, "a_max must be >= 1, got " + std::to_string(system.a_max())});

  std::vector<i64> primes;
  for (const auto& [key, t] : system.types()) {
    const auto [p, a] = key;
    if (primes.empty() || primes.back() != p) primes.push_back(p);
    if (!is_prime(p)) {
      out.push_back({p, a, std::to_string(p) + " is not prime"});
      continue;
    }
    if (a < 1 || a > system.a_max()) {
      out.push_back({p, a, "exponent " + std::to_string(a) + " outside [1, " + std::to_string(system.a_max()) + "]"});
      continue;
    }
    if (t < 1 || t > a) {
      out.push_back({p, a, "t_A(" + pp(p, a) + ") = " + std::to_string(t) + " is outside [1, " + std::to_string(a) + "]"});
      continue;
    }
    if (a % t != 0)
      out.push_back({p, a, "t_A(" + pp(p, a) + ") = " + std::to_string(t) + ": " + std::to_string(t) +
                               " does not divide " + std::to_string(a)});
  }

  // Chain consistency over every exponent in scope of each listed prime.
  for (i64 p : primes) {
    if (!is_prime(p)) continue;
    for (int a = 1; a <= system.a_max(); ++a) {
      const int t = system.type(p, a);
      if (t < 1 || t > a || a % t != 0) continue;  // reported above
      for (int i = 1; i <= a / t; ++i) {
        const int chained = system.type(p, i * t);
        if (chained != t) {
          out.push_back({p, a, "chain violation at p=" + std::to_string(p) + ": t_A(" + pp(p, a) + ") = " +
                                   std::to_string(t) + " requires t_A(" + pp(p, i * t) + ") = " + std::to_string(t) +
                                   ", found " + std::to_string(chained)});
          break;
        }
      }
    }
  }
  return out;
}

namespace {

std::string describe(const std::vector<Violation>& v) {
  std::string msg = "irregular system of divisors (" + std::to_string(v.size()) + " violation" +
                    (v.size() == 1 ? "" : "s") + ")";
  for (const auto& x : v) msg += "\n  " + x.message;
  return msg;
}

}  // namespace

InvalidSystemError::InvalidSystemError(std::vector<Violation> violations)
    : std::runtime_error(describe(violations)), violations_(std::move(violations)) {}

RegularSystem parse_system_spec(std::string_view json_text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("system spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("system spec must be a JSON object");

  try {
    const std::string kind = doc.value("kind", std::string("custom"));
    if (kind == "dirichlet" || kind == "D") return RegularSystem::dirichlet();
    if (kind == "unitary" || kind == "U") return RegularSystem::unitary();
    if (kind != "custom") throw std::invalid_argument("unknown system kind '" + kind + "'");

    const std::string def = doc.value("default", std::string("dirichlet-default"));
    RegularSystem::DefaultRule rule;
    if (def == "dirichlet-default")
      rule = RegularSystem::DefaultRule::Dirichlet;
    else if (def == "unitary-default")
      rule = RegularSystem::DefaultRule::Unitary;
    else
      throw std::invalid_argument("unknown default rule '" + def + "'");

    const int a_max = doc.value("a_max", RegularSystem::kDefaultAMax);
    RegularSystem::TypeTable types;
    if (doc.contains("types")) {
      if (!doc["types"].is_array()) throw std::invalid_argument("\"types\" must be an array");
      for (const auto& entry : doc["types"]) {
        const auto key = std::make_pair(entry.at("p").get<i64>(), entry.at("a").get<int>());
        if (!types.emplace(key, entry.at("t").get<int>()).second)
          throw std::invalid_argument("duplicate type entry for " + std::to_string(key.first) + "^" +
                                      std::to_string(key.second));
      }
    }
    return RegularSystem::custom(rule, a_max, std::move(types), doc.value("name", std::string("custom")));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed system spec: ") + e.what());
  }
}

RegularSystem load_system_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open system spec file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_system_spec(buf.str());
}

DivisorSetA divisor_set(const RegularSystem& system, i64 n) {
  const auto f = factorize(n);
  std::vector<i64> members{1};
  for (const auto& [p, a] : f.factors()) {
    const int t = system.type(p, a);
    const i64 step = checked_pow(p, t);
    const std::size_t base = members.size();
    i64 pk = 1;
    for (int i = 1; i <= a / t; ++i) {
      pk *= step;
      for (std::size_t j = 0; j < base; ++j) members.push_back(members[j] * pk);
    }
  }
  std::sort(members.begin(), members.end());
  return {n, std::move(members)};
}

bool in_divisor_set(const RegularSystem& system, i64 d, i64 n) {
  if (d < 1 || n % d != 0) return false;
  for (const auto& [p, a] : factorize(n).factors()) {
    int v = 0;
    while (d % p == 0) {
      d /= p;
      ++v;
    }
    if (v % system.type(p, a) != 0) return false;
  }
  return true;
}

i64 gcd_A(const RegularSystem& system, i64 k, i64 r) {
  if (r < 1) throw std::invalid_argument("gcd_A: modulus must be >= 1");
  if (k < 0) throw std::invalid_argument("gcd_A: k must be >= 0");
  if (k == 0) return r;
  i64 out = 1;
  for (const auto& [p, a] : factorize(r).factors()) {
    const int t = system.type(p, a);
    int v = 0;
    for (i64 rest = k; v < a && rest % p == 0; rest /= p) ++v;
    out *= checked_pow(p, v - v % t);
  }
  return out;
}

std::vector<i64> convolve_A(const RegularSystem& system, std::span<const i64> f, std::span<const i64> g) {
  if (f.size() != g.size()) throw std::invalid_argument("convolve_A: operands differ in length");
  std::vector<i64> out(f.size(), 0);
  for (std::size_t n = 1; n < f.size(); ++n) {
    i64 acc = 0;
    for (i64 d : divisor_set(system, static_cast<i64>(n)).members)
      acc = checked_add(acc, checked_mul(f[d], g[n / d]));
    out[n] = acc;
  }
  return out;
}

int mu_A(const RegularSystem& system, i64 n) {
  int out = 1;
  for (const auto& [p, a] : factorize(n).factors()) {
    if (system.type(p, a) != a) return 0;
    out = -out;
  }
  return out;
}

i64 phi_A(const RegularSystem& system, i64 r) {
  i64 out = 1;
  for (const auto& [p, a] : factorize(r).factors()) {
    const int t = system.type(p, a);
    out = checked_mul(out, checked_pow(p, a) - checked_pow(p, a - t));
  }
  return out;
}

i64 gamma_A(const RegularSystem& system, i64 r) {
  i64 out = 1;
  for (const auto& [p, a] : factorize(r).factors())
    out = checked_mul(out, checked_pow(p, a - system.type(p, a) + 1));
  return out;
}

i64 psi_A(const RegularSystem& system, i64 r) {
  i64 out = 1;
  for (const auto& [p, a] : factorize(r).factors()) {
    const int t = system.type(p, a);
    out = checked_mul(out, checked_add(checked_pow(p, a), checked_pow(p, a - t)));
  }
  return out;
}

}  // namespace ramlab
