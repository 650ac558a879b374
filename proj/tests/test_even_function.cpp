#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ramlab/even_function.hpp"
#include "ramlab/ramanujan.hpp"

using namespace ramlab;

namespace {

EvenFunction<Rational> ramanujan_basis(i64 r, i64 q) {
  return EvenFunction<Rational>::tabulate(r, [&](i64 d) { return make_rational(ramanujan_c(d, q)); });
}

EvenFunction<Rational> random_even(std::mt19937_64& rng, i64 r) {
  return EvenFunction<Rational>::tabulate(r, [&](i64) { return oracle::random_rational(rng); });
}

EvenFunction<Rational> constant_one(i64 r) {
  return EvenFunction<Rational>::tabulate(r, [](i64) { return Rational(1); });
}

}  // namespace

TEST_CASE("construction and evaluation") {
  const auto c6 = ramanujan_basis(6, 6);
  CHECK(c6(8) == -1);  // gcd(8, 6) = 2, c(2, 6) = -1
  CHECK(c6(6) == c6.at_divisor(6));
  const auto one = constant_one(30);
  for (i64 n = 1; n <= 100; ++n) CHECK(one(n) == 1);

  CHECK_THROWS_AS(EvenFunction<Rational>(12, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(EvenFunction<Rational>::from_map(6, {{1, 1}, {2, 1}, {3, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(EvenFunction<Rational>::from_map(6, {{1, 1}, {2, 1}, {3, 1}, {6, 1}, {4, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(c6.at_divisor(4), std::invalid_argument);
}

TEST_CASE("A-even tagging") {
  const auto U = RegularSystem::unitary();
  for (i64 r = 1; r <= 60; ++r) {
    const auto ca = EvenFunction<Rational>::tabulate(r, [&](i64 d) { return make_rational(c_A_divisor(U, d, r)); });
    const auto tagged = ca.with_system(U);
    REQUIRE(tagged.system().has_value());
    // E_{A,r} is inside E_r: the tagged function still evaluates through gcd(n, r).
    for (i64 n = 1; n <= 3 * r; ++n) REQUIRE(tagged(n) == make_rational(c_A_divisor(U, n, r)));
  }
  // f(2) != f((2, 4)_U) = f(1)
  const auto not_u_even = EvenFunction<Rational>::from_map(4, {{1, 0}, {2, 1}, {4, 0}});
  CHECK_THROWS_AS(not_u_even.with_system(U), std::invalid_argument);
  CHECK_NOTHROW(not_u_even.with_system(RegularSystem::dirichlet()));
}

TEST_CASE("inner product") {
  for (i64 r = 1; r <= 100; ++r) {
    REQUIRE(inner_product(constant_one(r), constant_one(r)) == 1);
    for (i64 q : divisors(r)) REQUIRE(inner_product(ramanujan_basis(r, q), ramanujan_basis(r, q)) == euler_phi(q));
  }
  CHECK_THROWS_AS(inner_product(constant_one(4), constant_one(6)), std::invalid_argument);

  std::mt19937_64 rng(5);
  for (i64 r : {12, 36, 60, 97}) {
    const auto f = random_even(rng, r), g = random_even(rng, r);
    CHECK(inner_product(f, g) == inner_product(g, f));
    CHECK(inner_product(f, f) > 0);
  }
}

TEST_CASE("orthonormal basis c'(., q) (complex)") {
  for (i64 r : {1, 6, 12, 30, 64, 90}) {
    const auto divs = divisors(r);
    for (i64 q : divs)
      for (i64 q2 : divs) {
        auto normalized = [&](i64 qq) {
          return EvenFunction<Complex>::tabulate(r, [&](i64 d) {
            return Complex(static_cast<double>(ramanujan_c(d, qq)) / std::sqrt(static_cast<double>(euler_phi(qq))), 0);
          });
        };
        const Complex ip = inner_product(normalized(q), normalized(q2));
        CHECK(std::abs(ip - Complex(q == q2 ? 1.0 : 0.0, 0.0)) < 1e-12);
      }
  }
}

TEST_CASE("complex-valued functions") {
  const auto f = EvenFunction<Complex>::tabulate(12, [](i64 d) { return Complex(static_cast<double>(d), -1.0 / d); });
  const auto h = fourier_coeffs(f);
  for (i64 n = 1; n <= 48; ++n) CHECK(std::abs(h.reconstruct(n) - f(n)) < 1e-9);
  CHECK(std::abs(mean_value(f) - h.at(1)) < 1e-12);
  const Complex self = inner_product(f, f);
  CHECK(std::abs(self.imag()) < 1e-12);
  CHECK(self.real() > 0);
}

TEST_CASE("Fourier coefficients") {
  for (i64 r = 1; r <= 100; ++r) {
    for (i64 q : divisors(r)) {
      const auto h = fourier_coeffs(ramanujan_basis(r, q));
      for (i64 q2 : divisors(r)) REQUIRE(h.at(q2) == (q2 == q ? 1 : 0));
    }
    const auto h1 = fourier_coeffs(constant_one(r));
    for (i64 q : divisors(r)) REQUIRE(h1.at(q) == (q == 1 ? 1 : 0));
  }
}

TEST_CASE("Fourier coefficients agree with a linear solve") {
  std::mt19937_64 rng(17);
  for (i64 r : {1, 2, 6, 12, 18, 30, 36, 48, 60, 72, 96, 100}) {
    // indicator of gcd(n, r) = 1 plus a random function
    const auto coprime = EvenFunction<Rational>::tabulate(r, [](i64 d) { return Rational(d == 1 ? 1 : 0); });
    for (const auto& f : {coprime, random_even(rng, r)}) {
      const auto h = fourier_coeffs(f);
      const auto solved = oracle::solve_coefficients(r, f.values(), [](i64 n, i64 q) { return ramanujan_c(n, q); });
      REQUIRE(h.h == solved);
    }
  }
}

TEST_CASE("round trip, formula agreement, and mean = h(1)") {
  std::mt19937_64 rng(23);
  for (i64 r = 1; r <= 200; ++r) {
    const auto f = random_even(rng, r);
    const auto a = fourier_coeffs_by_projection(f);
    const auto b = fourier_coeffs_by_dual_sum(f);
    REQUIRE(a.h == b.h);
    for (i64 d : f.divisors()) REQUIRE(a.reconstruct(d) == f.at_divisor(d));
    REQUIRE(mean_value(f) == a.at(1));
  }
}

TEST_CASE("Gram matrix of the Ramanujan basis is diagonal and positive") {
  for (i64 r : {1, 12, 60, 128, 180, 200}) {
    const auto divs = divisors(r);
    for (i64 q : divs)
      for (i64 q2 : divs) {
        const Rational ip = inner_product(ramanujan_basis(r, q), ramanujan_basis(r, q2));
        if (q == q2)
          REQUIRE(ip > 0);
        else
          REQUIRE(ip == 0);
      }
  }
}

TEST_CASE("mean value examples") {
  for (i64 r = 1; r <= 100; ++r) REQUIRE(mean_value(ramanujan_basis(r, r)) == (r == 1 ? 1 : 0));
  CHECK(mean_value(constant_one(17)) == 1);
  CHECK(mean_value(ramanujan_basis(2, 2)) == 0);
}

TEST_CASE("certified bound and partial_sum_even") {
  for (i64 x : {1, 2, 10, 999, 10000}) {
    const auto rep = partial_sum_even(constant_one(24), x);
    CHECK(rep.residual == 0);
    CHECK(rep.exact_sum == x);
  }
  const auto c6 = ramanujan_basis(6, 6);
  CHECK(sup_norm(c6) == 2);
  const auto rep = partial_sum_even(c6, 10000);
  CHECK(rep.exact_sum == -3);  // brute sum oracle
  CHECK(rational_abs(rep.exact_sum) <= dedekind_psi(6));
  CHECK(rep.pass);

  // Bound = K_f * sigma(r)/r * sum psi(q): for r = 6, K = 2: 2 * 2 * (1+3+4+12) = 80.
  CHECK(certified_bound(c6) == 80);

  std::mt19937_64 rng(29);
  for (i64 r = 1; r <= 50; ++r) {
    const auto f = random_even(rng, r);
    for (i64 x : {1000, 10000}) {
      Rational brute = 0;
      for (i64 n = 1; n <= x; ++n) brute += f(n);
      const auto p = partial_sum_even(f, x);
      REQUIRE(p.exact_sum == brute);
      REQUIRE(p.pass);
    }
  }
  CHECK_THROWS_AS(partial_sum_even(c6, 0), std::invalid_argument);
}

TEST_CASE("even-function literal") {
  const auto f = parse_even_function("r=12; 1:1, 2:-1, 3:0, 4:2, 6:0, 12:5");
  CHECK(f.modulus() == 12);
  CHECK(f.at_divisor(4) == 2);
  CHECK(f(24) == 5);
  const auto g = parse_even_function(" r = 4 ;1:1/2, 2: -3/4 ,4:6/3 ");
  CHECK(g.at_divisor(1) == Rational(1, 2));
  CHECK(g.at_divisor(4) == 2);
  CHECK(parse_even_function(to_literal(f)).values() == f.values());

  CHECK_THROWS_AS(parse_even_function("r=12; 1:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_even_function("r=4; 1:1, 2:1, 4:1, 3:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_even_function("r=4; 1:1, 1:2, 2:1, 4:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_even_function("1:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_even_function("r=2; 1:x, 2:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_even_function("r=2; 1:1/0, 2:1"), std::invalid_argument);
}

TEST_CASE("Maxsein phi") {
  CHECK(maxsein_phi(1, 1, 12) == 4);
  CHECK(maxsein_phi(1, 2, 2) == 2);
  CHECK(maxsein_phi(1, 3, 1) == 1);
  CHECK_THROWS_AS(maxsein_phi(2, 4, 7), std::invalid_argument);
  for (i64 n = 1; n <= 300; ++n) REQUIRE(maxsein_phi(1, 1, n) == euler_phi(n));

  // n-even in d, and independent of s when gcd(s, d) = 1.
  for (i64 n = 1; n <= 60; ++n)
    for (i64 s : {1, 5, 7})
      for (i64 d = 1; d <= 3 * n; ++d) {
        if (std::gcd(s, d) != 1) continue;
        REQUIRE(maxsein_phi(s, d, n) == maxsein_phi(1, std::gcd(d, n), n));
      }
}

TEST_CASE("Maxsein mean") {
  CHECK(maxsein_mean(1, 1) == 1);
  CHECK(maxsein_mean(1, 2) == Rational(3, 2));
  CHECK(maxsein_mean(1, 12) == 7);
  for (i64 n = 1; n <= 100; ++n)
    for (i64 s : {1, 5, 7}) REQUIRE(mean_value(maxsein_even_function(s, n)) == maxsein_mean(s, n));
}
