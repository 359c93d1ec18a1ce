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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cwdw/errors.hpp"
#include "cwdw/field.hpp"
#include "oracle.hpp"

using namespace cwdw;

namespace {

oracle::NaiveField naive_of(const GaloisField& f) {
  const auto c = f.modulus().coefficients();
  return oracle::NaiveField(f.p(), std::vector<std::uint32_t>(c.begin(), c.end()));
}

class FieldParams : public ::testing::TestWithParam<std::pair<std::uint32_t, unsigned>> {};

}  // namespace

TEST(Field, DefaultModuli) {
  EXPECT_EQ(GaloisField::construct(3, 5).modulus().to_string(), "x^5 + 2x + 1");
  EXPECT_EQ(GaloisField::construct(5, 5).modulus().to_string(), "x^5 + 4x + 2");
  EXPECT_EQ(GaloisField::construct(3, 5).pi(), (FieldElement{3}));  // x packs to p
}

TEST(Field, RejectsBadCharacteristic) {
  try {
    GaloisField::construct(2, 5);
    FAIL() << "expected ParameterError";
  } catch (const ParameterError& e) {
    EXPECT_STREQ(e.what(), "p must be an odd prime");
  }
  EXPECT_THROW(GaloisField::construct(9, 2), ParameterError);
  EXPECT_THROW(GaloisField::construct(3, 0), ParameterError);
}

TEST(Field, PrimeField) {
  const GaloisField f = GaloisField::construct(7, 1);
  EXPECT_EQ(f.q(), 7u);
  for (std::uint64_t a = 1; a < 7; ++a) {
    EXPECT_EQ(f.mul(FieldElement{a}, f.inv(FieldElement{a})), f.one());
    EXPECT_EQ(f.trace(FieldElement{a}), a);
  }
}

TEST_P(FieldParams, ArithmeticAgreesWithNaiveOracle) {
  const auto [p, m] = GetParam();
  const GaloisField f = GaloisField::construct(p, m);
  const GaloisField g = GaloisField::construct(p, m, false);
  ASSERT_TRUE(f.has_tables());
  ASSERT_FALSE(g.has_tables());
  const oracle::NaiveField n = naive_of(f);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 400; ++i) {
    const FieldElement a{rng() % f.q()};
    const FieldElement b{rng() % f.q()};
    const auto na = n.from_packed(a.packed);
    const auto nb = n.from_packed(b.packed);
    EXPECT_EQ(f.add(a, b).packed, n.to_packed(n.add(na, nb)));
    EXPECT_EQ(f.mul(a, b).packed, n.to_packed(n.mul(na, nb)));
    EXPECT_EQ(g.mul(a, b), f.mul(a, b));
    EXPECT_EQ(f.sub(f.add(a, b), b), a);
    EXPECT_EQ(f.trace(a), n.trace(na));
    EXPECT_EQ(g.trace(a), f.trace(a));
    const std::uint64_t e = rng() % (3 * f.q());
    EXPECT_EQ(f.pow(a, e).packed, n.to_packed(n.pow(na, e)));
    EXPECT_EQ(g.pow(a, e), f.pow(a, e));
    if (a.packed != 0) {
      EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
      EXPECT_EQ(g.inv(a), f.inv(a));
      EXPECT_EQ(f.exp(f.log(a)), a);
    }
  }
}

TEST_P(FieldParams, PiGeneratesTheMultiplicativeGroup) {
  const auto [p, m] = GetParam();
  const GaloisField f = GaloisField::construct(p, m);
  std::set<std::uint64_t> seen;
  FieldElement x = f.one();
  for (std::uint64_t i = 0; i < f.order(); ++i) {
    EXPECT_EQ(f.exp(i), x);
    seen.insert(x.packed);
    x = f.mul(x, f.pi());
  }
  EXPECT_EQ(x, f.one());
  EXPECT_EQ(seen.size(), f.order());
}

TEST_P(FieldParams, FrobeniusAndTraceProperties) {
  const auto [p, m] = GetParam();
  const GaloisField f = GaloisField::construct(p, m);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const FieldElement a{rng() % f.q()};
    const FieldElement b{rng() % f.q()};
    EXPECT_EQ(f.frobenius(a, m), a);
    EXPECT_EQ(f.frobenius(a, -1), f.frobenius(a, m - 1));
    EXPECT_EQ(f.frobenius(f.add(a, b), 1), f.add(f.frobenius(a, 1), f.frobenius(b, 1)));
    EXPECT_EQ(f.trace(f.add(a, b)), (f.trace(a) + f.trace(b)) % p);
    EXPECT_EQ(f.trace(f.frobenius(a, 1)), f.trace(a));
  }
  // Each value of the trace is taken exactly q/p times.
  std::vector<std::uint64_t> counts(p, 0);
  for (std::uint64_t v = 0; v < f.q(); ++v) ++counts[f.trace(FieldElement{v})];
  for (auto c : counts) EXPECT_EQ(c, f.q() / p);
}

TEST_P(FieldParams, ResidueClassesSplitEvenly) {
  const auto [p, m] = GetParam();
  const GaloisField f = GaloisField::construct(p, m);
  const GaloisField g = GaloisField::construct(p, m, false);
  std::uint64_t squares = 0;
  for (std::uint64_t v = 0; v < f.q(); ++v) {
    const ResidueClass c = f.residue_class(FieldElement{v});
    EXPECT_EQ(c, g.residue_class(FieldElement{v}));
    if (c == ResidueClass::Square) ++squares;
  }
  EXPECT_EQ(squares, (f.q() - 1) / 2);
  EXPECT_EQ(f.residue_class(f.zero()), ResidueClass::Zero);
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldParams,
                         ::testing::Values(std::pair{3u, 5u}, std::pair{5u, 5u}, std::pair{3u, 7u},
                                           std::pair{7u, 3u}, std::pair{3u, 1u}));

TEST(Field, AlternativeModuliGiveIsomorphicFields) {
  const auto moduli = GaloisField::primitive_moduli(3, 5, 2);
  ASSERT_EQ(moduli.size(), 2u);
  EXPECT_NE(moduli[0], moduli[1]);
  const GaloisField a = GaloisField::from_modulus(moduli[0]);
  const GaloisField b = GaloisField::from_modulus(moduli[1]);
  // The trace of pi^i depends on the modulus, but its value histogram does not.
  std::vector<std::uint64_t> ha(3, 0), hb(3, 0);
  for (std::uint64_t i = 0; i < a.order(); ++i) {
    ++ha[a.trace(a.exp(i))];
    ++hb[b.trace(b.exp(i))];
  }
  EXPECT_EQ(ha, hb);
}

TEST(Field, FromModulusRejectsNonPrimitive) {
  // x^2 + 1 is irreducible over F_3 but x has order 4, not 8.
  EXPECT_THROW(GaloisField::from_modulus(PolyFp(3, {1, 0, 1})), ParameterError);
  EXPECT_THROW(GaloisField::from_modulus(PolyFp(3, {2, 0, 1})), ParameterError);  // x^2 - 1
}
