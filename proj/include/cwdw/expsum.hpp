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

#ifndef CWDW_EXPSUM_HPP
#define CWDW_EXPSUM_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cwdw/bigint.hpp"
#include "cwdw/code.hpp"
#include "cwdw/field.hpp"
#include "cwdw/parallel.hpp"

namespace cwdw {

// The exponential sum S = sum_x zeta_p^{f(x)} of
//   f(x) = Tr(delta0 x + delta1 x^{d1} + delta2 x^{d2})
// is never formed over the complex numbers. Because f(yx) = y f(x) for
// y in F_p, every nonzero value of f is taken equally often, and
//   S = (p n0 - q) / (p - 1),   n0 = #{x : f(x) = 0}.

/// f(x) as an element of F_p.
std::uint32_t f_delta(const DeltaTriple& delta, FieldElement x, const CodeSpec& spec,
                      const GaloisField& field);

// Square matrix over F_p of an F_p-linear map of F_q, in the polynomial
// basis. Column j holds the coordinates of the image of x^j.
struct LinearizedMap {
  std::uint32_t p = 0;
  unsigned m = 0;
  std::vector<std::uint32_t> entries;  // row-major, m * m

  std::uint32_t at(unsigned row, unsigned col) const { return entries[row * m + col]; }
  std::vector<std::uint32_t> apply(std::span<const std::uint32_t> coords) const;
};

/// H(x) = delta2^{p^{4k}} x^{p^{8k}} + delta1^{p^{4k}} x^{p^{6k}}
///      + delta1^{p^{2k}} x^{p^{2k}} + 2 delta0^{p^{4k}} x^{p^{4k}} + delta2 x,
/// which is L(x)^{p^{4k}}; see radical_map.
LinearizedMap build_linearized(const DeltaTriple& delta, const CodeSpec& spec,
                               const GaloisField& field);

/// L(x) = 2 delta0 x + delta1 x^{p^{2k}} + delta1^{p^{-2k}} x^{p^{-2k}}
///      + delta2 x^{p^{4k}} + delta2^{p^{-4k}} x^{p^{-4k}},
/// with Q(x+z) - Q(x) - Q(z) = Tr(z L(x)) for Q(x) = f(x^2). Its kernel is
/// the radical of Q.
LinearizedMap radical_map(const DeltaTriple& delta, const CodeSpec& spec,
                          const GaloisField& field);

/// Gaussian elimination over F_p.
unsigned matrix_rank(const LinearizedMap& map);

struct FormRank {
  unsigned rank = 0;
  bool zero_form = false;  // delta = 0; rank 0 and outside the m-4 bound
};

/// Rank of Q(x) = f(x^2), i.e. m - nullity(H).
FormRank rank_of_form(const DeltaTriple& delta, const CodeSpec& spec, const GaloisField& field);

struct SValueReport {
  DeltaTriple delta;
  unsigned rank = 0;
  std::int64_t s = 0;
  std::uint64_t n0 = 0;
};

/// s = (p n0 - q)/(p - 1); throws InvariantViolation on inexact division.
std::int64_t s_from_zero_count(std::uint64_t n0, std::uint32_t p, std::uint64_t q);

/// n0 counted directly over all of F_q.
SValueReport s_exact(const DeltaTriple& delta, const CodeSpec& spec, const GaloisField& field);

/// n0 counted over the (q-1)/(p-1) representatives pi^i, i < (q-1)/(p-1),
/// of F_q^* / F_p^*: n0 = 1 + (p-1) #{i : f(pi^i) = 0}. Requires tables.
std::uint64_t zero_count_projective(const DeltaTriple& delta, const CodeSpec& spec,
                                    const GaloisField& field);

enum class SumStrategy {
  CountAll,   // count n0 for every delta
  RankFirst,  // odd rank => s = 0 without counting; count only even rank
};

struct ValueDistribution {
  CodeSpec spec;
  std::string method;                       // "full" or "sampled"
  std::map<std::int64_t, BigInt> frequencies;  // s -> count
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> samples;
  // (rank, s) -> count, present when ranks were computed. Delta = 0 is
  // recorded with rank 0.
  std::map<std::pair<unsigned, std::int64_t>, BigInt> rank_profile;

  BigInt total() const;
};

struct FullEnumerationOptions {
  bool with_ranks = false;
  SumStrategy strategy = SumStrategy::CountAll;
};

/// Exhaustive over F_q^3. Throws BudgetExceeded when q^3 > budget.
/// RankFirst implies with_ranks.
ValueDistribution value_distribution_full(const CodeSpec& spec, const GaloisField& field,
                                          const RunOptions& options = {},
                                          const FullEnumerationOptions& full = {});

/// Empirical distribution over uniform random deltas. Triples are drawn
/// sequentially from one seeded generator before any work is split, so the
/// result is independent of the worker count.
ValueDistribution value_distribution_sampled(const CodeSpec& spec, const GaloisField& field,
                                             const SamplingOptions& sampling,
                                             const RunOptions& options = {});

/// sum_s s^t freq(s) for t = 1..4.
std::array<BigInt, 4> power_moments(const ValueDistribution& dist);

/// Pushes every s through weight_from_s.
std::map<std::uint64_t, BigInt> weights_from_values(const ValueDistribution& dist);

}  // namespace cwdw

#endif  // CWDW_EXPSUM_HPP
