#include "ramlab/kernels.hpp"

#include <exception>
#include <mutex>
#include <stdexcept>

#include <omp.h>

namespace ramlab::kernels {
namespace {

// Exceptions cannot cross an OpenMP region boundary; the first one thrown
// by any iteration is kept and rethrown after the region ends.
class ExceptionSink {
 public:
  template <class Fn>
  void run(Fn&& fn) noexcept {
    try {
      fn();
    } catch (...) {
      std::lock_guard lock(mutex_);
      if (!first_) first_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (first_) std::rethrow_exception(first_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr first_;
};

void check_bounds(i64 a, i64 b) {
  if (a < 1 || b < 1) throw std::invalid_argument("kernel bounds must be >= 1");
}

// Per-modulus evaluators are built once and shared read-only by all threads.
std::vector<CaDivisorForm> divisor_forms(const RegularSystem& system, i64 r_max) {
  std::vector<CaDivisorForm> forms;
  forms.reserve(static_cast<std::size_t>(r_max));
  for (i64 r = 1; r <= r_max; ++r) forms.emplace_back(system, r);
  return forms;
}

i64 table_entry(const RegularSystem& system, const std::vector<CaDivisorForm>& forms, i64 n, i64 r, CaRoute route) {
  return route == CaRoute::Divisor ? forms[r - 1](n) : c_A_core(system, n, r);
}

}  // namespace

CaTable ca_table_serial(const RegularSystem& system, i64 n_max, i64 r_max, CaRoute route) {
  check_bounds(n_max, r_max);
  const auto forms = route == CaRoute::Divisor ? divisor_forms(system, r_max) : std::vector<CaDivisorForm>{};
  CaTable t{system, n_max, r_max, std::vector<i64>(static_cast<std::size_t>(n_max * r_max))};
  for (i64 n = 1; n <= n_max; ++n)
    for (i64 r = 1; r <= r_max; ++r) t.values[(n - 1) * r_max + (r - 1)] = table_entry(system, forms, n, r, route);
  return t;
}

CaTable ca_table_parallel(const RegularSystem& system, i64 n_max, i64 r_max, CaRoute route) {
  check_bounds(n_max, r_max);
  const auto forms = route == CaRoute::Divisor ? divisor_forms(system, r_max) : std::vector<CaDivisorForm>{};
  CaTable t{system, n_max, r_max, std::vector<i64>(static_cast<std::size_t>(n_max * r_max))};
  i64* out = t.values.data();
  ExceptionSink sink;
#pragma omp parallel for schedule(dynamic, 8)
  for (i64 n = 1; n <= n_max; ++n)
    sink.run([&] {
      for (i64 r = 1; r <= r_max; ++r) out[(n - 1) * r_max + (r - 1)] = table_entry(system, forms, n, r, route);
    });
  sink.rethrow();
  return t;
}

std::vector<std::vector<i64>> ca_prefix_sums_serial(const RegularSystem& system, i64 r_max, i64 x_max) {
  check_bounds(r_max, x_max);
  const auto forms = divisor_forms(system, r_max);
  std::vector<std::vector<i64>> out(static_cast<std::size_t>(r_max), std::vector<i64>(static_cast<std::size_t>(x_max)));
  for (i64 r = 1; r <= r_max; ++r) {
    i64 acc = 0;
    for (i64 x = 1; x <= x_max; ++x) {
      acc = checked_add(acc, forms[r - 1](x));
      out[r - 1][x - 1] = acc;
    }
  }
  return out;
}

std::vector<std::vector<i64>> ca_prefix_sums_parallel(const RegularSystem& system, i64 r_max, i64 x_max) {
  check_bounds(r_max, x_max);
  const auto forms = divisor_forms(system, r_max);
  std::vector<std::vector<i64>> out(static_cast<std::size_t>(r_max), std::vector<i64>(static_cast<std::size_t>(x_max)));
  // Rows are independent; each prefix scan stays sequential inside its row.
  ExceptionSink sink;
#pragma omp parallel for schedule(dynamic, 4)
  for (i64 r = 1; r <= r_max; ++r)
    sink.run([&] {
      i64 acc = 0;
      auto& row = out[r - 1];
      for (i64 x = 1; x <= x_max; ++x) {
        acc = checked_add(acc, forms[r - 1](x));
        row[x - 1] = acc;
      }
    });
  sink.rethrow();
  return out;
}

i64 ca_product_sum_serial(const RegularSystem& system, i64 r, i64 s, i64 x) {
  check_bounds(r, s);
  check_bounds(x, 1);
  const CaDivisorForm fr(system, r), fs(system, s);
  i64 acc = 0;
  for (i64 n = 1; n <= x; ++n) acc = checked_add(acc, checked_mul(fr(n), fs(n)));
  return acc;
}

i64 ca_product_sum_parallel(const RegularSystem& system, i64 r, i64 s, i64 x) {
  check_bounds(r, s);
  check_bounds(x, 1);
  const CaDivisorForm fr(system, r), fs(system, s);
  // Integer partials combined in thread-index order: exact and deterministic.
  std::vector<i64> partial(static_cast<std::size_t>(omp_get_max_threads()), 0);
  ExceptionSink sink;
#pragma omp parallel
  {
    i64 acc = 0;
#pragma omp for schedule(static)
    for (i64 n = 1; n <= x; ++n) sink.run([&] { acc = checked_add(acc, checked_mul(fr(n), fs(n))); });
    partial[static_cast<std::size_t>(omp_get_thread_num())] = acc;
  }
  sink.rethrow();
  i64 total = 0;
  for (i64 p : partial) total = checked_add(total, p);
  return total;
}

}  // namespace ramlab::kernels
