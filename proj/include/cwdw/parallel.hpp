// Copyright 2026 The cwdw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CWDW_PARALLEL_HPP
#define CWDW_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

#include "cwdw/bigint.hpp"

namespace cwdw {

// Knobs shared by every exhaustive or sampled computation.
struct RunOptions {
  /// Refuse work whose operation count exceeds this.
  std::uint64_t budget = 100'000'000;
  /// Worker count; 0 means the CWDW_JOBS environment variable, falling back
  /// to the hardware concurrency.
  unsigned jobs = 0;
};

unsigned resolve_jobs(unsigned requested);

/// Throws BudgetExceeded when operations > budget.
void require_budget(const BigInt& operations, std::uint64_t budget, const std::string& what);

// Splits [0, n) into contiguous ranges, runs body(begin, end, acc) on each
// with a private accumulator, and folds the accumulators in range order.
// With integer-only accumulators the result does not depend on `jobs`.
template <class Acc, class Body, class Merge>
Acc parallel_reduce(std::uint64_t n, unsigned jobs, const Acc& init, Body body, Merge merge) {
  jobs = std::max(1u, jobs);
  const std::uint64_t chunks = std::min<std::uint64_t>(n, jobs);
  if (chunks <= 1) {
    Acc acc = init;
    if (n > 0) body(std::uint64_t{0}, n, acc);
    return acc;
  }
  std::vector<Acc> partial(chunks, init);
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> workers;
  workers.reserve(chunks);
  for (std::uint64_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = n * c / chunks;
    const std::uint64_t end = n * (c + 1) / chunks;
    workers.emplace_back([&, c, begin, end] {
      try {
        body(begin, end, partial[c]);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Acc acc = init;
  for (auto& part : partial) merge(acc, part);
  return acc;
}

/// Elementwise sum of equally sized count vectors.
inline void add_counts(std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& from) {
  for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
}

}  // namespace cwdw

#endif  // CWDW_PARALLEL_HPP
