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

#include "cwdw/poly_fp.hpp"

#include <algorithm>
#include <sstream>

#include "cwdw/errors.hpp"
#include "cwdw/number_theory.hpp"

namespace cwdw {

namespace fp {

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  return static_cast<std::uint32_t>(powmod_u64(a, e, p));
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw ParameterError("inverse of zero in F_p");
  return pow(a, p - 2, p);
}

std::uint32_t from_signed(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

}  // namespace fp

PolyFp::PolyFp(std::uint32_t p) : p_(p) {}

PolyFp::PolyFp(std::uint32_t p, std::vector<std::uint32_t> coeffs)
    : p_(p), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c %= p_;
  normalize();
}

PolyFp PolyFp::from_signed(std::uint32_t p, const std::vector<std::int64_t>& coeffs) {
  std::vector<std::uint32_t> reduced;
  reduced.reserve(coeffs.size());
  for (auto c : coeffs) reduced.push_back(fp::from_signed(c, p));
  return PolyFp(p, std::move(reduced));
}

PolyFp PolyFp::monomial(std::uint32_t p, std::size_t degree, std::uint32_t coeff) {
  std::vector<std::uint32_t> c(degree + 1, 0);
  c[degree] = coeff;
  return PolyFp(p, std::move(c));
}

void PolyFp::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolyFp PolyFp::monic() const {
  if (is_zero()) return *this;
  return scaled(fp::inv(leading(), p_));
}

PolyFp PolyFp::scaled(std::uint32_t c) const {
  std::vector<std::uint32_t> out(coeffs_);
  for (auto& v : out) v = fp::mul(v, c % p_, p_);
  return PolyFp(p_, std::move(out));
}

std::uint32_t PolyFp::eval(std::uint32_t x) const {
  std::uint32_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = fp::add(fp::mul(acc, x % p_, p_), *it, p_);
  }
  return acc;
}

PolyFp operator+(const PolyFp& a, const PolyFp& b) {
  std::vector<std::uint32_t> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = fp::add(a.coeff(i), b.coeff(i), a.p_);
  return PolyFp(a.p_, std::move(out));
}

PolyFp operator-(const PolyFp& a, const PolyFp& b) {
  std::vector<std::uint32_t> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = fp::sub(a.coeff(i), b.coeff(i), a.p_);
  return PolyFp(a.p_, std::move(out));
}

PolyFp operator*(const PolyFp& a, const PolyFp& b) {
  if (a.is_zero() || b.is_zero()) return PolyFp(a.p_);
  const std::uint64_t p = a.p_;
  std::vector<std::uint64_t> acc(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{a.coeffs_[i]} * b.coeffs_[j]) % p;
    }
  }
  std::vector<std::uint32_t> out(acc.begin(), acc.end());
  return PolyFp(a.p_, std::move(out));
}

std::string PolyFp::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    std::uint32_t c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

PolyFp poly_mul(const PolyFp& a, const PolyFp& b) { return a * b; }

PolyDivRem poly_divrem(const PolyFp& dividend, const PolyFp& divisor) {
  if (divisor.is_zero()) throw ParameterError("polynomial division by zero");
  const std::uint32_t p = dividend.characteristic();
  auto rem = std::vector<std::uint32_t>(dividend.coefficients().begin(),
                                        dividend.coefficients().end());
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {PolyFp(p), dividend};
  std::vector<std::uint32_t> quot(dividend.degree() - dd + 1, 0);
  const std::uint32_t lead_inv = fp::inv(divisor.leading(), p);
  auto dc = divisor.coefficients();
  for (int i = dividend.degree(); i >= dd; --i) {
    std::uint32_t c = fp::mul(rem[i], lead_inv, p);
    if (c == 0) continue;
    quot[i - dd] = c;
    for (int j = 0; j <= dd; ++j) {
      rem[i - dd + j] = fp::sub(rem[i - dd + j], fp::mul(c, dc[j], p), p);
    }
  }
  rem.resize(dd);
  return {PolyFp(p, std::move(quot)), PolyFp(p, std::move(rem))};
}

PolyFp poly_gcd(PolyFp a, PolyFp b) {
  while (!b.is_zero()) {
    PolyFp r = poly_divrem(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PolyFp poly_mulmod(const PolyFp& a, const PolyFp& b, const PolyFp& modulus) {
  return poly_divrem(a * b, modulus).remainder;
}

PolyFp poly_powmod(const PolyFp& base, std::uint64_t exp, const PolyFp& modulus) {
  const std::uint32_t p = base.characteristic();
  PolyFp result = poly_divrem(PolyFp(p, {1}), modulus).remainder;
  PolyFp b = poly_divrem(base, modulus).remainder;
  while (exp > 0) {
    if (exp & 1) result = poly_mulmod(result, b, modulus);
    exp >>= 1;
    if (exp > 0) b = poly_mulmod(b, b, modulus);
  }
  return result;
}

bool is_irreducible(const PolyFp& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const std::uint32_t p = f.characteristic();
  const PolyFp x = PolyFp::monomial(p, 1);
  // frob[j] = x^{p^j} mod f
  std::vector<PolyFp> frob{poly_divrem(x, f).remainder};
  for (int j = 1; j <= n; ++j) frob.push_back(poly_powmod(frob.back(), p, f));
  if (frob[n] != poly_divrem(x, f).remainder) return false;
  for (auto r : distinct_prime_factors(static_cast<std::uint64_t>(n))) {
    PolyFp g = poly_gcd(f, frob[n / r] - x);
    if (g.degree() != 0) return false;
  }
  return true;
}

}  // namespace cwdw
