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

#ifndef CWDW_CODE_HPP
#define CWDW_CODE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cwdw/bigint.hpp"
#include "cwdw/field.hpp"
#include "cwdw/parallel.hpp"
#include "cwdw/poly_fp.hpp"

namespace cwdw {

// Which family of parameters a CodeSpec is validated against.
//   Coprime: gcd(m, k) = 1, m odd, m >= 5 (the five-weight family).
//   General: e = gcd(m, k), m/e odd, m/e >= 5.
enum class ParameterRegime { Coprime, General };

// Parameters (p, m, k) of the cyclic code with parity-check polynomial
// h_1 h_{d1} h_{d2}. Only validate_spec creates these.
struct CodeSpec {
  std::uint32_t p = 0;
  unsigned m = 0;
  std::uint64_t k = 0;
  unsigned e = 0;  // gcd(m, k)
  std::uint64_t q = 0;
  BigInt d1;  // (p^{2k} + 1) / 2
  BigInt d2;  // (p^{4k} + 1) / 2
  ParameterRegime regime = ParameterRegime::Coprime;
  // d1, d2 reduced mod q - 1, for exponent arithmetic.
  std::uint64_t d1_mod = 0;
  std::uint64_t d2_mod = 0;
};

// Largest accepted k; d1 and d2 are stored exactly.
inline constexpr std::uint64_t kMaxK = 4096;

/// Throws ParameterError naming the violated constraint.

CodeSpec validate_spec(std::uint32_t p, unsigned m, std::uint64_t k,
                       ParameterRegime regime = ParameterRegime::Coprime);

struct DeltaTriple {
  FieldElement delta0;
  FieldElement delta1;
  FieldElement delta2;

  bool is_zero() const { return delta0.packed == 0 && delta1.packed == 0 && delta2.packed == 0; }
  friend bool operator==(const DeltaTriple&, const DeltaTriple&) = default;
};

struct Codeword {
  std::vector<std::uint32_t> symbols;  // length q - 1, entries in F_p
};

/// Entry i is Tr(delta0 pi^i + delta1 pi^{i d1} + delta2 pi^{i d2}).
Codeword codeword(const DeltaTriple& delta, const CodeSpec& spec, const GaloisField& field);

std::uint64_t hamming_weight(const Codeword& cw);

/// One-step right cyclic shift (c_{n-1}, c_0, ..., c_{n-2}).
Codeword cyclic_shift(const Codeword& cw);

/// w = (p-1) p^{m-1} - ((p-1)/p) S. Throws ParameterError when S is not a
/// multiple of p or w falls outside [0, q-1].
std::uint64_t weight_from_s(std::int64_t s, const CodeSpec& spec);

/// True iff c(x) h(x) = 0 mod x^{q-1} - 1 for the given parity-check h.
bool delsarte_check(const Codeword& cw, const PolyFp& parity_check);
bool delsarte_check(const DeltaTriple& delta, const CodeSpec& spec, const GaloisField& field);

enum class WeightMethod { Exact, ClosedForm, Sampled };

std::string to_string(WeightMethod method);

struct WeightDistribution {
  CodeSpec spec;
  WeightMethod method = WeightMethod::Exact;
  std::map<std::uint64_t, BigInt> frequencies;  // weight -> count
  std::optional<std::uint64_t> seed;            // sampled only
  std::optional<std::uint64_t> samples;         // sampled only

  BigInt total() const;
};

struct SamplingOptions {
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 1;
};

/// Exact: exhaustive over all q^3 triples (requires q^3 <= budget).
/// ClosedForm: the tabulated formulas for the code's regime.
/// Sampled: empirical counts over `sampling.samples` uniform triples.
WeightDistribution weight_distribution(const CodeSpec& spec, const GaloisField& field,
                                       WeightMethod method, const RunOptions& options = {},
                                       const SamplingOptions& sampling = {});

// Seeded uniform sampling that does not depend on the standard library's
// distribution implementations, so reports are reproducible across
// toolchains.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
DeltaTriple random_delta(std::mt19937_64& rng, const GaloisField& field);
FieldElement random_element(std::mt19937_64& rng, const GaloisField& field);
FieldElement random_nonzero(std::mt19937_64& rng, const GaloisField& field);

}  // namespace cwdw

#endif  // CWDW_CODE_HPP
