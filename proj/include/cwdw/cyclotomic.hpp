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

#ifndef CWDW_CYCLOTOMIC_HPP
#define CWDW_CYCLOTOMIC_HPP

#include <cstdint>
#include <vector>

#include "cwdw/field.hpp"
#include "cwdw/poly_fp.hpp"

namespace cwdw {

struct CodeSpec;

// The p-cyclotomic coset {i p^j mod (q-1)}; members sorted, representative is
// the smallest member.
struct CyclotomicCoset {
  std::uint64_t representative = 0;
  std::vector<std::uint64_t> members;

  std::size_t size() const { return members.size(); }
  bool contains(std::uint64_t i) const;
};

CyclotomicCoset cyclotomic_coset(std::uint64_t i, const GaloisField& field);

/// One coset per orbit of multiplication by p on Z/(q-1), ordered by
/// representative.
std::vector<CyclotomicCoset> all_cyclotomic_cosets(const GaloisField& field);

/// Minimal polynomial of pi^{-i} over F_p, computed as the product of
/// (x - pi^{-i p^j}) over the coset. Throws InvariantViolation if a
/// coefficient of that product falls outside F_p.
PolyFp minimal_poly(std::uint64_t i, const GaloisField& field);

/// h(x) = h_1(x) h_{d1}(x) h_{d2}(x). Throws ParameterError when the three
/// factors are not pairwise distinct of degree m.
PolyFp build_parity_check(const CodeSpec& spec, const GaloisField& field);

/// g(x) = (x^{q-1} - 1) / h(x). Throws ParameterError on a nonzero remainder.
PolyFp generator_poly(const PolyFp& h, const GaloisField& field);

/// x^n - 1 over F_p.
PolyFp cyclic_modulus(std::uint32_t p, std::uint64_t n);

/// Evaluates a polynomial over F_p at a point of the extension field.
FieldElement poly_eval(const PolyFp& poly, FieldElement x, const GaloisField& field);

}  // namespace cwdw

#endif  // CWDW_CYCLOTOMIC_HPP
