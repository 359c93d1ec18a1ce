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

#include "cwdw/field.hpp"

#include <limits>

#include "cwdw/errors.hpp"
#include "cwdw/number_theory.hpp"

namespace cwdw {

namespace {

constexpr std::uint32_t kNoLog = std::numeric_limits<std::uint32_t>::max();

void check_characteristic(std::uint32_t p, unsigned m) {
  if (p < 3 || !is_prime(p)) throw ParameterError("p must be an odd prime");
  if (m < 1) throw ParameterError("m must be at least 1");
  if (!checked_pow(p, m)) throw ParameterError("p^m does not fit in a 64-bit integer");
}

// x is primitive modulo an irreducible f iff x^{(q-1)/r} != 1 for every prime
// r dividing q - 1.
bool x_is_primitive(const PolyFp& f, std::uint64_t q) {
  const std::uint32_t p = f.characteristic();
  const PolyFp x = PolyFp::monomial(p, 1);
  const PolyFp one(p, {1});
  for (auto r : distinct_prime_factors(q - 1)) {
    if (poly_powmod(x, (q - 1) / r, f) == one) return false;
  }
  return true;
}

}  // namespace

std::string to_string(ResidueClass c) {
  switch (c) {
    case ResidueClass::Zero: return "zero";
    case ResidueClass::Square: return "square";
    case ResidueClass::NonSquare: return "nonsquare";
  }
  return "?";
}

std::vector<PolyFp> GaloisField::primitive_moduli(std::uint32_t p, unsigned m,
                                                  std::size_t count) {
  check_characteristic(p, m);
  const std::uint64_t q = *checked_pow(p, m);
  std::vector<PolyFp> found;
  for (std::uint64_t n = 1; n < q && found.size() < count; ++n) {
    if (n % p == 0) continue;  // x | f
    std::vector<std::uint32_t> c(m + 1, 0);
    std::uint64_t rest = n;
    for (unsigned j = 0; j < m; ++j) {
      c[j] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    c[m] = 1;
    PolyFp f(p, std::move(c));
    if (is_irreducible(f) && x_is_primitive(f, q)) found.push_back(std::move(f));
  }
  return found;
}

GaloisField GaloisField::construct(std::uint32_t p, unsigned m, bool with_tables) {
  auto moduli = primitive_moduli(p, m, 1);
  if (moduli.empty()) throw InvariantViolation("no primitive polynomial found");
  return GaloisField(std::move(moduli.front()), with_tables);
}

GaloisField GaloisField::from_modulus(const PolyFp& modulus, bool with_tables) {
  if (modulus.degree() < 1) throw ParameterError("modulus must have positive degree");
  const std::uint32_t p = modulus.characteristic();
  const auto m = static_cast<unsigned>(modulus.degree());
  check_characteristic(p, m);
  if (!modulus.is_monic()) throw ParameterError("modulus must be monic");
  if (!is_irreducible(modulus)) throw ParameterError("modulus is not irreducible");
  if (!x_is_primitive(modulus, *checked_pow(p, m))) {
    throw ParameterError("x is not a generator modulo the given polynomial");
  }
  return GaloisField(modulus, with_tables);
}

GaloisField::GaloisField(PolyFp modulus, bool with_tables)
    : p_(modulus.characteristic()),
      m_(static_cast<unsigned>(modulus.degree())),
      q_(*checked_pow(p_, m_)),
      modulus_(std::move(modulus)) {
  place_.resize(m_);
  std::uint64_t v = 1;
  for (unsigned j = 0; j < m_; ++j, v *= p_) place_[j] = v;
  // pi = x, or the root of x + c_0 in the prime field case.
  pi_ = m_ == 1 ? FieldElement{fp::neg(modulus_.coeff(0), p_)} : FieldElement{p_};
  if (with_tables && q_ <= kTableLimit) build_tables();

  trace_basis_.resize(m_);
  for (unsigned j = 0; j < m_; ++j) {
    FieldElement basis{place_[j]};
    FieldElement sum = zero();
    for (unsigned i = 0; i < m_; ++i) sum = add(sum, frobenius(basis, i));
    if (sum.packed >= p_) throw InvariantViolation("trace did not land in F_p");
    trace_basis_[j] = static_cast<std::uint32_t>(sum.packed);
  }
}

void GaloisField::build_tables() {
  const std::uint64_t n = order();
  antilog_.resize(n);
  log_.assign(q_, kNoLog);
  std::vector<std::uint32_t> digits(m_, 0);
  digits[0] = 1;
  auto pack = [&] {
    std::uint64_t v = 0;
    for (unsigned j = 0; j < m_; ++j) v += digits[j] * place_[j];
    return v;
  };
  const std::uint32_t pi_prime = static_cast<std::uint32_t>(pi_.packed);
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto e = static_cast<std::uint32_t>(pack());
    if (log_[e] != kNoLog) throw InvariantViolation("generator order below q - 1");
    antilog_[i] = e;
    log_[e] = static_cast<std::uint32_t>(i);
    if (m_ == 1) {
      digits[0] = fp::mul(digits[0], pi_prime, p_);
      continue;
    }
    // multiply by x and reduce with the monic modulus
    const std::uint32_t top = digits[m_ - 1];
    for (unsigned j = m_ - 1; j > 0; --j) digits[j] = digits[j - 1];
    digits[0] = 0;
    if (top != 0) {
      for (unsigned j = 0; j < m_; ++j) {
        digits[j] = fp::sub(digits[j], fp::mul(top, modulus_.coeff(j), p_), p_);
      }
    }
  }
  zech_.resize(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    std::uint64_t e = antilog_[i];
    e = (e % p_ == p_ - 1) ? e - (p_ - 1) : e + 1;
    zech_[i] = e == 0 ? kNoLog : log_[e];
  }
}

FieldElement GaloisField::from_int(std::int64_t v) const { return {fp::from_signed(v, p_)}; }

FieldElement GaloisField::from_index(std::uint64_t i) const {
  if (i >= q_) throw ParameterError("element index out of range");
  return {i};
}

FieldElement GaloisField::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != m_) throw ParameterError("coefficient vector must have length m");
  std::uint64_t v = 0;
  for (unsigned j = 0; j < m_; ++j) v += std::uint64_t{coeffs[j] % p_} * place_[j];
  return {v};
}

std::vector<std::uint32_t> GaloisField::coeffs(FieldElement a) const {
  std::vector<std::uint32_t> out(m_);
  std::uint64_t v = a.packed;
  for (unsigned j = 0; j < m_; ++j) {
    out[j] = static_cast<std::uint32_t>(v % p_);
    v /= p_;
  }
  return out;
}

FieldElement GaloisField::add(FieldElement a, FieldElement b) const {
  if (a.packed == 0) return b;
  if (b.packed == 0) return a;
  if (has_tables()) {
    const std::uint64_t n = order();
    const std::uint64_t la = log_[a.packed];
    const std::uint64_t lb = log_[b.packed];
    const std::uint64_t d = lb >= la ? lb - la : lb + n - la;
    const std::uint32_t z = zech_[d];
    if (z == kNoLog) return zero();
    std::uint64_t e = la + z;
    if (e >= n) e -= n;
    return {antilog_[e]};
  }
  std::uint64_t x = a.packed, y = b.packed, out = 0;
  for (unsigned j = 0; j < m_; ++j) {
    out += fp::add(static_cast<std::uint32_t>(x % p_), static_cast<std::uint32_t>(y % p_), p_) *
           place_[j];
    x /= p_;
    y /= p_;
  }
  return {out};
}

FieldElement GaloisField::neg(FieldElement a) const {
  if (a.packed == 0) return a;
  if (has_tables()) {
    const std::uint64_t n = order();
    std::uint64_t e = log_[a.packed] + n / 2;
    if (e >= n) e -= n;
    return {antilog_[e]};
  }
  std::uint64_t x = a.packed, out = 0;
  for (unsigned j = 0; j < m_; ++j) {
    out += fp::neg(static_cast<std::uint32_t>(x % p_), p_) * place_[j];
    x /= p_;
  }
  return {out};
}

FieldElement GaloisField::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement GaloisField::mul(FieldElement a, FieldElement b) const {
  if (a.packed == 0 || b.packed == 0) return zero();
  if (!has_tables()) return mul_polynomial_basis(a, b);
  const std::uint64_t n = order();
  std::uint64_t e = std::uint64_t{log_[a.packed]} + log_[b.packed];
  if (e >= n) e -= n;
  return {antilog_[e]};
}

FieldElement GaloisField::inv(FieldElement a) const {
  if (a.packed == 0) throw ParameterError("inverse of zero");
  if (!has_tables()) return inv_polynomial_basis(a);
  const std::uint64_t la = log_[a.packed];
  return {antilog_[la == 0 ? 0 : order() - la]};
}

FieldElement GaloisField::pow(FieldElement a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.packed == 0) return zero();
  if (!has_tables()) return pow_polynomial_basis(a, e);
  return {antilog_[mulmod_u64(log_[a.packed], e % order(), order())]};
}

FieldElement GaloisField::frobenius(FieldElement x, std::int64_t j) const {
  const std::int64_t mm = m_;
  const auto reduced = static_cast<std::uint64_t>(((j % mm) + mm) % mm);
  return pow(x, place_[reduced]);
}

std::uint32_t GaloisField::trace(FieldElement x) const {
  std::uint64_t acc = 0;
  std::uint64_t v = x.packed;
  for (unsigned j = 0; j < m_; ++j) {
    acc += (v % p_) * trace_basis_[j];
    v /= p_;
  }
  return static_cast<std::uint32_t>(acc % p_);
}

ResidueClass GaloisField::residue_class(FieldElement x) const {
  if (x.packed == 0) return ResidueClass::Zero;
  if (has_tables()) return log_[x.packed] % 2 == 0 ? ResidueClass::Square : ResidueClass::NonSquare;
  const FieldElement euler = pow(x, order() / 2);
  if (euler == one()) return ResidueClass::Square;
  if (euler == from_int(-1)) return ResidueClass::NonSquare;
  throw InvariantViolation("Euler criterion returned neither 1 nor -1");
}

FieldElement GaloisField::exp(std::uint64_t i) const {
  i %= order();
  if (has_tables()) return {antilog_[i]};
  return pow_polynomial_basis(pi_, i);
}

std::uint64_t GaloisField::log(FieldElement a) const {
  if (!has_tables()) throw ParameterError("discrete log requires table mode");
  if (a.packed == 0 || a.packed >= q_) throw ParameterError("log of zero or foreign element");
  return log_[a.packed];
}

FieldElement GaloisField::mul_polynomial_basis(FieldElement a, FieldElement b) const {
  if (m_ == 1) return {fp::mul(static_cast<std::uint32_t>(a.packed),
                               static_cast<std::uint32_t>(b.packed), p_)};
  const auto ca = coeffs(a);
  const auto cb = coeffs(b);
  std::vector<std::uint64_t> acc(2 * m_ - 1, 0);
  for (unsigned i = 0; i < m_; ++i) {
    if (ca[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j) acc[i + j] = (acc[i + j] + std::uint64_t{ca[i]} * cb[j]) % p_;
  }
  for (unsigned i = 2 * m_ - 2; i >= m_; --i) {
    const std::uint64_t c = acc[i];
    if (c == 0) continue;
    for (unsigned j = 0; j < m_; ++j) {
      acc[i - m_ + j] = (acc[i - m_ + j] + c * (p_ - modulus_.coeff(j))) % p_;
    }
  }
  std::uint64_t out = 0;
  for (unsigned j = 0; j < m_; ++j) out += acc[j] * place_[j];
  return {out};
}

FieldElement GaloisField::pow_polynomial_basis(FieldElement a, std::uint64_t e) const {
  FieldElement result = one();
  while (e > 0) {
    if (e & 1) result = mul_polynomial_basis(result, a);
    e >>= 1;
    if (e > 0) a = mul_polynomial_basis(a, a);
  }
  return result;
}

FieldElement GaloisField::inv_polynomial_basis(FieldElement a) const {
  if (a.packed == 0) throw ParameterError("inverse of zero");
  return pow_polynomial_basis(a, q_ - 2);
}

std::vector<std::uint32_t> GaloisField::trace_by_exponent() const {
  if (!has_tables()) throw ParameterError("trace table requires table mode");
  std::vector<std::uint32_t> out(order());
  for (std::uint64_t i = 0; i < order(); ++i) out[i] = trace({antilog_[i]});
  return out;
}

std::string GaloisField::element_to_string(FieldElement a) const {
  return PolyFp(p_, coeffs(a)).to_string();
}

}  // namespace cwdw
