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

#ifndef CWDW_NUMBER_THEORY_HPP
#define CWDW_NUMBER_THEORY_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace cwdw {

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

/// Distinct prime factors of n in increasing order (Pollard rho).
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

/// base^exp, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t n);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t n);

}  // namespace cwdw

#endif  // CWDW_NUMBER_THEORY_HPP
