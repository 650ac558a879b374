#pragma once

// Data-parallel kernels over (n, r) grids. Every kernel has a plain serial
// reference with the same signature; the OpenMP version must return
// bit-identical results regardless of thread count or schedule.

#include <vector>

#include "ramlab/ramanujan.hpp"

namespace ramlab::kernels {

CaTable ca_table_serial(const RegularSystem& system, i64 n_max, i64 r_max, CaRoute route);
CaTable ca_table_parallel(const RegularSystem& system, i64 n_max, i64 r_max, CaRoute route);

/// Brute-force prefix sums: out[r - 1][x - 1] = sum_{n <= x} c_A(n, r) for
/// 1 <= r <= r_max, 1 <= x <= x_max, accumulated term by term.
std::vector<std::vector<i64>> ca_prefix_sums_serial(const RegularSystem& system, i64 r_max, i64 x_max);
std::vector<std::vector<i64>> ca_prefix_sums_parallel(const RegularSystem& system, i64 r_max, i64 x_max);

/// sum_{n <= x} c_A(n, r) c_A(n, s).
i64 ca_product_sum_serial(const RegularSystem& system, i64 r, i64 s, i64 x);
i64 ca_product_sum_parallel(const RegularSystem& system, i64 r, i64 s, i64 x);

}  // namespace ramlab::kernels
