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

#ifndef CWDW_POLY_FP_HPP
#define CWDW_POLY_FP_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cwdw {

// Scalar arithmetic in the prime field F_p. Operands are assumed reduced.
namespace fp {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p - b);
}
inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}
std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);
/// Throws ParameterError on a == 0.
std::uint32_t inv(std::uint32_t a, std::uint32_t p);
/// Reduces a signed integer into [0, p).
std::uint32_t from_signed(std::int64_t v, std::uint32_t p);

}  // namespace fp

// Polynomial over F_p, lowest degree first, always in canonical form (no
// trailing zero coefficients; the zero polynomial has no coefficients).
class PolyFp {
 public:
  explicit PolyFp(std::uint32_t p);
  PolyFp(std::uint32_t p, std::vector<std::uint32_t> coeffs);
  /// Coefficients given as signed integers, reduced mod p.
  static PolyFp from_signed(std::uint32_t p, const std::vector<std::int64_t>& coeffs);
  static PolyFp monomial(std::uint32_t p, std::size_t degree, std::uint32_t coeff = 1);

  std::uint32_t characteristic() const { return p_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  std::span<const std::uint32_t> coefficients() const { return coeffs_; }
  std::uint32_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  std::uint32_t leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

  PolyFp monic() const;
  PolyFp scaled(std::uint32_t c) const;
  std::uint32_t eval(std::uint32_t x) const;

  friend PolyFp operator+(const PolyFp& a, const PolyFp& b);
  friend PolyFp operator-(const PolyFp& a, const PolyFp& b);
  friend PolyFp operator*(const PolyFp& a, const PolyFp& b);
  friend bool operator==(const PolyFp& a, const PolyFp& b) = default;

  /// e.g. "x^5 + 2x + 1"
  std::string to_string() const;

 private:
  void normalize();

  std::uint32_t p_;
  std::vector<std::uint32_t> coeffs_;
};

struct PolyDivRem {
  PolyFp quotient;
  PolyFp remainder;
};

PolyFp poly_mul(const PolyFp& a, const PolyFp& b);
/// Throws ParameterError when divisor is zero.
PolyDivRem poly_divrem(const PolyFp& dividend, const PolyFp& divisor);
/// Monic gcd; gcd(0, 0) = 0.
PolyFp poly_gcd(PolyFp a, PolyFp b);
PolyFp poly_mulmod(const PolyFp& a, const PolyFp& b, const PolyFp& modulus);
PolyFp poly_powmod(const PolyFp& base, std::uint64_t exp, const PolyFp& modulus);

/// Rabin's test: f of degree n is irreducible iff x^{p^n} = x mod f and
/// gcd(x^{p^{n/r}} - x, f) = 1 for every prime r | n.
bool is_irreducible(const PolyFp& f);

}  // namespace cwdw

#endif  // CWDW_POLY_FP_HPP
