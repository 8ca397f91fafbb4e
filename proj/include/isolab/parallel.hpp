/*
 * Copyright 2026 The isogeny-lab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ISOLAB_PARALLEL_HPP
#define ISOLAB_PARALLEL_HPP

#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace isolab {

// Worker count for sweeps: `requested` if positive, otherwise the
// ISOGENY_LAB_THREADS environment variable, otherwise hardware concurrency.
// Always at least 1.
unsigned worker_count(unsigned requested = 0);

// Runs fn(i) for i in [0, n) across `workers` threads with contiguous
// index blocks. fn writes into caller-owned slots, so results keep index
// order no matter how workers interleave. The first exception, if any, is
// rethrown on the calling thread.
template <typename Fn>
void parallel_for(std::uint64_t n, unsigned workers, Fn&& fn) {
  if (n == 0) return;
  if (workers <= 1 || n == 1) {
    for (std::uint64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  if (workers > n) workers = static_cast<unsigned>(n);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  std::uint64_t chunk = n / workers;
  std::uint64_t extra = n % workers;
  std::uint64_t start = 0;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t len = chunk + (w < extra ? 1 : 0);
    std::uint64_t lo = start;
    std::uint64_t hi = start + len;
    start = hi;
    pool.emplace_back([&, lo, hi, w] {
      try {
        for (std::uint64_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace isolab

#endif  // ISOLAB_PARALLEL_HPP
