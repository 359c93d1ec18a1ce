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

#ifndef CWDW_CLOSED_FORMS_HPP
#define CWDW_CLOSED_FORMS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cwdw/bigint.hpp"

namespace cwdw {

enum class TableKind {
  ValueDistribution,    // s -> frequency, e = 1
  WeightDistribution,   // weight -> frequency, e = 1
  GeneralWeights,       // weight -> frequency, any admissible e
  GeneralValues,        // s -> frequency, derived from GeneralWeights
};

std::string to_string(TableKind kind);

struct FrequencyRow {
  BigInt label;  // s-value or weight
  BigInt frequency;
};

// Exact tabulated distribution. Rows are sorted by label.
struct FrequencyTable {
  TableKind kind = TableKind::ValueDistribution;
  std::uint32_t p = 0;
  unsigned m = 0;
  unsigned e = 1;
  std::vector<FrequencyRow> rows;

  BigInt total() const;
  /// Frequency of a label, 0 when absent.
  BigInt frequency(const BigInt& label) const;
};

/// Distribution of S over all q^3 triples: values p^m, 0,
/// +-p^{(m+1)/2}, +-p^{(m+3)/2}. Requires m odd, m >= 5.
FrequencyTable table1(std::uint32_t p, unsigned m);

/// Weight distribution of the five-weight code, including the zero word.
FrequencyTable table2(std::uint32_t p, unsigned m);

/// Weight distribution for e = gcd(m, k) with m/e odd and >= 5, including
/// the zero word.
FrequencyTable table3(std::uint32_t p, unsigned m, unsigned e);

/// table1 for e = 1; otherwise table3 pushed back through
/// s = p^m - p w / (p - 1).
FrequencyTable value_table(std::uint32_t p, unsigned m, unsigned e);

/// (sum S, sum S^2, sum S^3, sum S^4) over all triples.
std::array<BigInt, 4> expected_moments(std::uint32_t p, unsigned m);

/// sum label^t * frequency for t = 1..4.
std::array<BigInt, 4> table_moments(const FrequencyTable& table);

struct FrequencyUnknowns {
  BigInt small_plus;   // S = +p^{(m+1)/2}
  BigInt small_minus;  // S = -p^{(m+1)/2}
  BigInt large_plus;   // S = +p^{(m+3)/2}
  BigInt large_minus;  // S = -p^{(m+3)/2}
};

/// Solves the four power-moment equations for the four nonzero-S
/// frequencies with exact rational elimination. Throws InvariantViolation if
/// the system is singular or the solution is not integral.
FrequencyUnknowns solve_frequency_system(std::uint32_t p, unsigned m);

/// "1+14520z^108+2548260z^144+..." (ascending weight).
std::string weight_enumerator_string(const FrequencyTable& table);

struct ReferenceEnumerator {
  std::uint32_t p;
  unsigned m;
  std::uint64_t k;
  std::map<std::uint64_t, BigInt> frequencies;  // nonzero weights only
};

/// Known weight enumerators for (3,5,1), (3,7,2), (5,5,1).
std::vector<ReferenceEnumerator> reference_enumerators();

}  // namespace cwdw

#endif  // CWDW_CLOSED_FORMS_HPP
