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

#include "cwdw/cyclotomic.hpp"

#include <algorithm>

#include "cwdw/code.hpp"
#include "cwdw/errors.hpp"
#include "cwdw/number_theory.hpp"

namespace cwdw {

bool CyclotomicCoset::contains(std::uint64_t i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

CyclotomicCoset cyclotomic_coset(std::uint64_t i, const GaloisField& field) {
  const std::uint64_t n = field.order();
  if (i >= n) throw ParameterError("coset index must lie in [0, q-1)");
  CyclotomicCoset coset;
  std::uint64_t j = i;
  do {
    coset.members.push_back(j);
    j = mulmod_u64(j, field.p(), n);
  } while (j != i);
  std::sort(coset.members.begin(), coset.members.end());
  coset.representative = coset.members.front();
  return coset;
}

std::vector<CyclotomicCoset> all_cyclotomic_cosets(const GaloisField& field) {
  const std::uint64_t n = field.order();
  std::vector<bool> seen(n, false);
  std::vector<CyclotomicCoset> out;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    out.push_back(cyclotomic_coset(i, field));
    for (auto v : out.back().members) seen[v] = true;
  }
  return out;
}

PolyFp minimal_poly(std::uint64_t i, const GaloisField& field) {
  const auto coset = cyclotomic_coset(i, field);
  const std::uint64_t n = field.order();
  // Product over roots pi^{-j}, with coefficients in F_q.
  std::vector<FieldElement> prod{field.one()};
  for (auto j : coset.members) {
    const FieldElement root = field.exp((n - j) % n);
    const FieldElement neg_root = field.neg(root);
    std::vector<FieldElement> next(prod.size() + 1, field.zero());
    for (std::size_t t = 0; t < prod.size(); ++t) {
      next[t + 1] = field.add(next[t + 1], prod[t]);
      next[t] = field.add(next[t], field.mul(prod[t], neg_root));
    }
    prod = std::move(next);
  }
  std::vector<std::uint32_t> coeffs;
  coeffs.reserve(prod.size());
  for (auto c : prod) {
    if (c.packed >= field.p()) throw InvariantViolation("minimal polynomial coefficient outside F_p");
    coeffs.push_back(static_cast<std::uint32_t>(c.packed));
  }
  return PolyFp(field.p(), std::move(coeffs));
}

PolyFp build_parity_check(const CodeSpec& spec, const GaloisField& field) {
  const std::uint64_t n = field.order();
  const std::uint64_t exps[3] = {1 % n, spec.d1_mod, spec.d2_mod};
  for (int a = 0; a < 3; ++a) {
    if (cyclotomic_coset(exps[a], field).size() != field.m()) {
      throw ParameterError("minimal polynomial of pi^-" + std::to_string(exps[a]) +
                           " does not have degree m");
    }
    for (int b = 0; b < a; ++b) {
      if (cyclotomic_coset(exps[b], field).contains(exps[a])) {
        throw ParameterError("h_1, h_d1, h_d2 are not pairwise distinct");
      }
    }
  }
  return minimal_poly(exps[0], field) * minimal_poly(exps[1], field) *
         minimal_poly(exps[2], field);
}

PolyFp cyclic_modulus(std::uint32_t p, std::uint64_t n) {
  std::vector<std::uint32_t> c(n + 1, 0);
  c[0] = p - 1;
  c[n] = 1;
  return PolyFp(p, std::move(c));
}

PolyFp generator_poly(const PolyFp& h, const GaloisField& field) {
  auto [quotient, remainder] = poly_divrem(cyclic_modulus(field.p(), field.order()), h);
  if (!remainder.is_zero()) throw ParameterError("h does not divide x^(q-1) - 1");
  return quotient;
}

FieldElement poly_eval(const PolyFp& poly, FieldElement x, const GaloisField& field) {
  FieldElement acc = field.zero();
  auto c = poly.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = field.add(field.mul(acc, x), field.from_int(*it));
  }
  return acc;
}

}  // namespace cwdw
