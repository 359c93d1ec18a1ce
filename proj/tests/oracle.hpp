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

#ifndef CWDW_TESTS_ORACLE_HPP
#define CWDW_TESTS_ORACLE_HPP

// Deliberately naive reference arithmetic used to cross-check the library.
// Elements are plain coefficient vectors; nothing is table driven and no code
// is shared with the library.

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

class NaiveField {
 public:
  // modulus: monic, lowest coefficient first, size m + 1.
  NaiveField(std::uint32_t p, std::vector<std::uint32_t> modulus)
      : p_(p), m_(static_cast<unsigned>(modulus.size() - 1)), mod_(std::move(modulus)) {
    q_ = 1;
    for (unsigned i = 0; i < m_; ++i) q_ *= p_;
  }

  using Elem = std::vector<std::uint32_t>;

  std::uint64_t q() const { return q_; }
  unsigned m() const { return m_; }

  // Base-p digits, least significant first: the same packing as the library.
  Elem from_packed(std::uint64_t v) const {
    Elem e(m_);
    for (unsigned i = 0; i < m_; ++i) {
      e[i] = static_cast<std::uint32_t>(v % p_);
      v /= p_;
    }
    return e;
  }
  std::uint64_t to_packed(const Elem& e) const {
    std::uint64_t v = 0;
    for (unsigned i = m_; i-- > 0;) v = v * p_ + e[i];
    return v;
  }

  Elem add(const Elem& a, const Elem& b) const {
    Elem r(m_);
    for (unsigned i = 0; i < m_; ++i) r[i] = (a[i] + b[i]) % p_;
    return r;
  }

  Elem scale(const Elem& a, std::uint32_t c) const {
    Elem r(m_);
    for (unsigned i = 0; i < m_; ++i) r[i] = static_cast<std::uint32_t>(std::uint64_t{a[i]} * c % p_);
    return r;
  }

  Elem mul(const Elem& a, const Elem& b) const {
    std::vector<std::uint64_t> prod(2 * m_, 0);
    for (unsigned i = 0; i < m_; ++i) {
      for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p_;
    }
    // Reduce from the top using x^m = -(lower terms of the modulus).
    for (unsigned d = 2 * m_ - 1; d >= m_; --d) {
      const std::uint64_t c = prod[d];
      if (c == 0) continue;
      prod[d] = 0;
      for (unsigned j = 0; j < m_; ++j) {
        prod[d - m_ + j] = (prod[d - m_ + j] + (p_ - mod_[j]) * c) % p_;
      }
    }
    Elem r(m_);
    for (unsigned i = 0; i < m_; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
    return r;
  }

  Elem one() const {
    Elem e(m_, 0);
    e[0] = 1;
    return e;
  }

  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = one();
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  // Sum of conjugates; the result lies in F_p (constant term).
  std::uint32_t trace(const Elem& a) const {
    Elem acc(m_, 0);
    Elem conj = a;
    for (unsigned j = 0; j < m_; ++j) {
      acc = add(acc, conj);
      conj = pow(conj, p_);
    }
    return acc[0];
  }

  bool is_zero(const Elem& a) const {
    for (auto c : a) {
      if (c != 0) return false;
    }
    return true;
  }

 private:
  std::uint32_t p_;
  unsigned m_;
  std::vector<std::uint32_t> mod_;
  std::uint64_t q_;
};

// Value counts N_a = #{x : Tr(g(x)) = a} of a function given as a packed
// table of g(x). The exponential sum is an integer exactly when all N_a with
// a != 0 agree, in which case it equals N_0 - N_1.
inline std::vector<std::uint64_t> value_counts(const NaiveField& f, std::uint32_t p,
                                               const std::vector<NaiveField::Elem>& g) {
  std::vector<std::uint64_t> counts(p, 0);
  for (const auto& v : g) ++counts[f.trace(v)];
  return counts;
}

}  // namespace oracle

#endif  // CWDW_TESTS_ORACLE_HPP
