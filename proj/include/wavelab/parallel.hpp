// Copyright (c) 2026 The wavelab authors
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdlib>
#include <cstddef>
#include <string>
#include <thread>
#include <vector>

namespace wavelab {

/// Worker count: WAVELAB_THREADS overrides hardware concurrency; the floor
/// is one either way.
inline unsigned worker_count() {
  if (const char* env = std::getenv("WAVELAB_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) return static_cast<unsigned>(cap);
  }
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

/// Strided index sweep with per-worker accumulators merged in worker order.
/// Safe for order-independent merges (sums, counts, maxima).
template <typename Acc, typename PerIndex, typename Merge>
Acc parallel_index_reduce(std::size_t n, Acc init, PerIndex per_index,
                          Merge merge) {
  const unsigned workers =
      n == 0 ? 1 : static_cast<unsigned>(
                       std::min<std::size_t>(worker_count(), n));
  if (workers <= 1) {
    Acc acc = init;
    for (std::size_t i = 0; i < n; ++i) per_index(i, acc);
    return acc;
  }
  std::vector<Acc> parts(workers, init);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) per_index(i, parts[w]);
    });
  }
  for (std::thread& t : pool) t.join();
  Acc acc = init;
  for (const Acc& part : parts) merge(acc, part);
  return acc;
}

}  // namespace wavelab
