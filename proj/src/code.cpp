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

#include "cwdw/code.hpp"

#include <limits>
#include <numeric>

#include "cwdw/closed_forms.hpp"
#include "cwdw/cyclotomic.hpp"
#include "cwdw/errors.hpp"
#include "cwdw/expsum.hpp"
#include "cwdw/number_theory.hpp"

namespace cwdw {

CodeSpec validate_spec(std::uint32_t p, unsigned m, std::uint64_t k, ParameterRegime regime) {
  if (p < 3 || !is_prime(p)) throw ParameterError("p must be an odd prime");
  if (m < 1) throw ParameterError("m must be positive");
  if (k < 1) throw ParameterError("k must be positive");
  // d1 and d2 are kept exactly; their size grows linearly in k.
  if (k > kMaxK) throw ParameterError("k must be at most " + std::to_string(kMaxK));
  const auto e = static_cast<unsigned>(std::gcd<std::uint64_t>(m, k));
  if (regime == ParameterRegime::Coprime) {
    if (m % 2 == 0) throw ParameterError("m must be odd");
    if (m < 5) throw ParameterError("m must be at least 5");
    if (e != 1) throw ParameterError("gcd(m, k) must be 1");
  } else {
    if ((m / e) % 2 == 0) throw ParameterError("m / gcd(m, k) must be odd");
    if (m / e < 5) throw ParameterError("m / gcd(m, k) must be at least 5");
  }
  const auto q = checked_pow(p, m);
  if (!q) throw ParameterError("p^m does not fit in a 64-bit integer");

  CodeSpec spec;
  spec.p = p;
  spec.m = m;
  spec.k = k;
  spec.e = e;
  spec.q = *q;
  spec.regime = regime;
  spec.d1 = (big_pow(p, 2 * k) + 1) / 2;
  spec.d2 = (big_pow(p, 4 * k) + 1) / 2;
  if (spec.d1 % 2 == 0 || spec.d2 % 2 == 0) throw InvariantViolation("d1 and d2 must be odd");
  spec.d1_mod = static_cast<std::uint64_t>(spec.d1 % (spec.q - 1));
  spec.d2_mod = static_cast<std::uint64_t>(spec.d2 % (spec.q - 1));
  return spec;
}

Codeword codeword(const DeltaTriple& delta, const CodeSpec& spec, const GaloisField& field) {
  const std::uint64_t n = field.order();
  Codeword cw;
  cw.symbols.resize(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    FieldElement v = field.mul(delta.delta0, field.exp(i));
    v = field.add(v, field.mul(delta.delta1, field.exp(mulmod_u64(i, spec.d1_mod, n))));
    v = field.add(v, field.mul(delta.delta2, field.exp(mulmod_u64(i, spec.d2_mod, n))));
    cw.symbols[i] = field.trace(v);
  }
  return cw;
}

std::uint64_t hamming_weight(const Codeword& cw) {
  std::uint64_t w = 0;
  for (auto s : cw.symbols) w += s != 0;
  return w;
}

Codeword cyclic_shift(const Codeword& cw) {
  Codeword out;
  out.symbols.reserve(cw.symbols.size());
  if (cw.symbols.empty()) return out;
  out.symbols.push_back(cw.symbols.back());
  out.symbols.insert(out.symbols.end(), cw.symbols.begin(), cw.symbols.end() - 1);
  return out;
}

std::uint64_t weight_from_s(std::int64_t s, const CodeSpec& spec) {
  const std::int64_t p = spec.p;
  if (s % p != 0) throw ParameterError("S must be divisible by p");
  const BigInt w = BigInt(p - 1) * big_pow(spec.p, spec.m - 1) - BigInt(p - 1) * (s / p);
  if (w < 0 || w > BigInt(spec.q - 1)) throw ParameterError("weight out of range for S");
  return static_cast<std::uint64_t>(w);
}

bool delsarte_check(const Codeword& cw, const PolyFp& parity_check) {
  const std::size_t n = cw.symbols.size();
  const std::uint32_t p = parity_check.characteristic();
  auto h = parity_check.coefficients();
  std::vector<std::uint64_t> prod(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t c = cw.symbols[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j < h.size(); ++j) {
      auto& slot = prod[(i + j) % n];
      slot = (slot + c * h[j]) % p;
    }
  }
  for (auto v : prod) {
    if (v != 0) return false;
  }
  return true;
}

bool delsarte_check(const DeltaTriple& delta, const CodeSpec& spec, const GaloisField& field) {
  return delsarte_check(codeword(delta, spec, field), build_parity_check(spec, field));
}

std::string to_string(WeightMethod method) {
  switch (method) {
    case WeightMethod::Exact: return "exact";
    case WeightMethod::ClosedForm: return "closed";
    case WeightMethod::Sampled: return "sampled";
  }
  return "?";
}

BigInt WeightDistribution::total() const {
  BigInt t = 0;
  for (const auto& [w, f] : frequencies) t += f;
  return t;
}

WeightDistribution weight_distribution(const CodeSpec& spec, const GaloisField& field,
                                       WeightMethod method, const RunOptions& options,
                                       const SamplingOptions& sampling) {
  WeightDistribution out;
  out.spec = spec;
  out.method = method;
  switch (method) {
    case WeightMethod::Exact:
      out.frequencies = weights_from_values(value_distribution_full(spec, field, options));
      break;
    case WeightMethod::ClosedForm: {
      const FrequencyTable table = spec.regime == ParameterRegime::Coprime
                                       ? table2(spec.p, spec.m)
                                       : table3(spec.p, spec.m, spec.e);
      for (const auto& row : table.rows) {
        out.frequencies[static_cast<std::uint64_t>(row.label)] = row.frequency;
      }
      break;
    }
    case WeightMethod::Sampled: {
      out.frequencies = weights_from_values(value_distribution_sampled(spec, field, sampling, options));
      out.seed = sampling.seed;
      out.samples = sampling.samples;
      break;
    }
  }
  return out;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw ParameterError("empty sampling range");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

FieldElement random_element(std::mt19937_64& rng, const GaloisField& field) {
  return {uniform_below(rng, field.q())};
}

FieldElement random_nonzero(std::mt19937_64& rng, const GaloisField& field) {
  return {1 + uniform_below(rng, field.q() - 1)};
}

DeltaTriple random_delta(std::mt19937_64& rng, const GaloisField& field) {
  DeltaTriple d;
  d.delta0 = random_element(rng, field);
  d.delta1 = random_element(rng, field);
  d.delta2 = random_element(rng, field);
  return d;
}

}  // namespace cwdw
