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

#include "cwdw/parallel.hpp"

#include <cstdlib>
#include <string>

#include "cwdw/errors.hpp"

namespace cwdw {

unsigned resolve_jobs(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CWDW_JOBS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void require_budget(const BigInt& operations, std::uint64_t budget, const std::string& what) {
  if (operations > budget) {
    throw BudgetExceeded(what + " needs " + operations.str() + " operations, over the budget of " +
                         std::to_string(budget) + " (raise it with --budget)");
  }
}

}  // namespace cwdw
