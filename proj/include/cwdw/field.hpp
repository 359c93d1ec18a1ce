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

#ifndef CWDW_FIELD_HPP
#define CWDW_FIELD_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cwdw/poly_fp.hpp"

namespace cwdw {

enum class ResidueClass { Zero, Square, NonSquare };

std::string to_string(ResidueClass c);

// An element of F_{p^m} in the polynomial basis {1, x, ..., x^{m-1}}, packed
// as the base-p integer sum c_j p^j. Elements of the prime subfield F_p are
// therefore packed as their own integer value.
struct FieldElement {
  std::uint64_t packed = 0;

  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

// A concrete realization of F_q, q = p^m, with modulus f and generator
// pi = x mod f. Immutable after construction; every operation is const and
// safe to call from concurrent workers.
//
// When q <= kTableLimit the field also carries log/antilog and Zech tables,
// and multiplicative operations are table lookups. Otherwise everything runs
// on the polynomial basis.
class GaloisField {
 public:
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 24;

  /// The first modulus in lexicographic order (see primitive_moduli) for
  /// which x is a generator. Deterministic across runs.
  static GaloisField construct(std::uint32_t p, unsigned m, bool with_tables = true);
  /// Throws ParameterError unless modulus is monic, irreducible and x has
  /// order exactly p^m - 1 modulo it.
  static GaloisField from_modulus(const PolyFp& modulus, bool with_tables = true);
  /// The first `count` monic degree-m polynomials (enumerated by their
  /// lower coefficients read as a base-p integer, c_0 least significant)
  /// that are irreducible with x primitive.
  static std::vector<PolyFp> primitive_moduli(std::uint32_t p, unsigned m, std::size_t count);

  std::uint32_t p() const { return p_; }
  unsigned m() const { return m_; }
  std::uint64_t q() const { return q_; }
  /// Order of the multiplicative group, q - 1.
  std::uint64_t order() const { return q_ - 1; }
  const PolyFp& modulus() const { return modulus_; }
  bool has_tables() const { return !log_.empty(); }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement pi() const { return pi_; }
  /// Embeds an integer through F_p.
  FieldElement from_int(std::int64_t v) const;
  /// Element with packed index i, 0 <= i < q.
  FieldElement from_index(std::uint64_t i) const;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElement a) const;
  bool contains(FieldElement a) const { return a.packed < q_; }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  /// Throws ParameterError on zero.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  /// x^{p^j}; j is reduced mod m, negative j allowed.
  FieldElement frobenius(FieldElement x, std::int64_t j) const;
  std::uint32_t trace(FieldElement x) const;
  ResidueClass residue_class(FieldElement x) const;

  /// pi^i for any i >= 0.
  FieldElement exp(std::uint64_t i) const;
  /// Discrete log to base pi. Requires tables and a nonzero argument.
  std::uint64_t log(FieldElement a) const;

  // Reference implementations on the polynomial basis only, exposed so the
  // table paths can be checked against them.
  FieldElement mul_polynomial_basis(FieldElement a, FieldElement b) const;
  FieldElement inv_polynomial_basis(FieldElement a) const;

  /// Tr(pi^i) for i in [0, q-1). Requires tables.
  std::vector<std::uint32_t> trace_by_exponent() const;

  std::string element_to_string(FieldElement a) const;

 private:
  GaloisField(PolyFp modulus, bool with_tables);
  void build_tables();
  FieldElement pow_polynomial_basis(FieldElement a, std::uint64_t e) const;

  std::uint32_t p_;
  unsigned m_;
  std::uint64_t q_;
  PolyFp modulus_;
  FieldElement pi_;
  std::vector<std::uint64_t> place_;        // p^j, j < m
  std::vector<std::uint32_t> trace_basis_;  // Tr(x^j), j < m
  std::vector<std::uint32_t> log_;          // indexed by packed element; log_[0] unused
  std::vector<std::uint32_t> antilog_;      // pi^i, i < q-1
  std::vector<std::uint32_t> zech_;         // log(1 + pi^i), kNoLog when 1 + pi^i = 0
};

/// Builds F_{p^m}. Throws ParameterError if p is not an odd prime, m < 1, or
/// p^m does not fit in 64 bits.
inline GaloisField construct_field(std::uint32_t p, unsigned m) {
  return GaloisField::construct(p, m);
}

}  // namespace cwdw

#endif  // CWDW_FIELD_HPP
