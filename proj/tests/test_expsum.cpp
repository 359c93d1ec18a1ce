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

#include "cwdw/closed_forms.hpp"
#include "cwdw/errors.hpp"
#include "cwdw/expsum.hpp"
#include "oracle.hpp"

using namespace cwdw;

namespace {

struct Fixture {
  CodeSpec spec;
  GaloisField field;
  oracle::NaiveField naive;
};

Fixture make(std::uint32_t p, unsigned m, std::uint64_t k) {
  GaloisField f = GaloisField::construct(p, m);
  const auto c = f.modulus().coefficients();
  oracle::NaiveField n(p, std::vector<std::uint32_t>(c.begin(), c.end()));
  return {validate_spec(p, m, k), std::move(f), std::move(n)};
}

// Exponential sum of f(x) = Tr(d0 x + d1 x^{D1} + d2 x^{D2}) from the full
// value histogram; fails the test if the sum is not an integer.
std::int64_t oracle_s(const Fixture& fx, const DeltaTriple& d) {
  const auto& n = fx.naive;
  const auto a = n.from_packed(d.delta0.packed);
  const auto b = n.from_packed(d.delta1.packed);
  const auto c = n.from_packed(d.delta2.packed);
  std::vector<oracle::NaiveField::Elem> g;
  for (std::uint64_t v = 0; v < n.q(); ++v) {
    const auto x = n.from_packed(v);
    g.push_back(n.add(n.add(n.mul(a, x), n.mul(b, n.pow(x, fx.spec.d1_mod))), n.mul(c, n.pow(x, fx.spec.d2_mod))));
  }
  const auto counts = oracle::value_counts(n, fx.spec.p, g);
  for (std::uint32_t i = 2; i < fx.spec.p; ++i) EXPECT_EQ(counts[i], counts[1]);
  return static_cast<std::int64_t>(counts[0]) - static_cast<std::int64_t>(counts[1]);
}

// Rank of Q(x) = Tr(d0 x^2 + d1 x^{2 D1} + d2 x^{2 D2}) from the size of its
// radical {z : Q(x+z) - Q(x) - Q(z) = 0 for every basis vector x}.
unsigned oracle_rank(const Fixture& fx, const DeltaTriple& d) {
  const auto& n = fx.naive;
  const auto a = n.from_packed(d.delta0.packed);
  const auto b = n.from_packed(d.delta1.packed);
  const auto c = n.from_packed(d.delta2.packed);
  const std::uint32_t p = fx.spec.p;
  auto Q = [&](const oracle::NaiveField::Elem& x) {
    const auto x2 = n.mul(x, x);
    return n.trace(n.add(n.add(n.mul(a, x2), n.mul(b, n.pow(x2, fx.spec.d1_mod))),
                         n.mul(c, n.pow(x2, fx.spec.d2_mod))));
  };
  std::vector<std::uint32_t> qtab(n.q());
  for (std::uint64_t v = 0; v < n.q(); ++v) qtab[v] = Q(n.from_packed(v));
  std::vector<oracle::NaiveField::Elem> basis;
  std::uint64_t place = 1;
  for (unsigned j = 0; j < n.m(); ++j, place *= p) basis.push_back(n.from_packed(place));
  std::uint64_t radical = 0;
  for (std::uint64_t v = 0; v < n.q(); ++v) {
    const auto z = n.from_packed(v);
    bool in = true;
    for (const auto& x : basis) {
      const std::uint32_t bxz =
          (qtab[n.to_packed(n.add(x, z))] + 2 * p - qtab[n.to_packed(x)] - qtab[v]) % p;
      if (bxz != 0) {
        in = false;
        break;
      }
    }
    if (in) ++radical;
  }
  unsigned dim = 0;
  while (radical > 1) {
    radical /= p;
    ++dim;
  }
  return n.m() - dim;
}

}  // namespace

TEST(ExpSum, ExactValuesAgreeWithNaiveOracle) {
  for (auto [p, m, k] : {std::tuple{3u, 5u, 1u}, std::tuple{3u, 5u, 2u}, std::tuple{5u, 5u, 1u}}) {
    const Fixture fx = make(p, m, k);
    std::mt19937_64 rng(17);
    for (int i = 0; i < 12; ++i) {
      const DeltaTriple d = random_delta(rng, fx.field);
      const SValueReport r = s_exact(d, fx.spec, fx.field);
      EXPECT_EQ(r.s, oracle_s(fx, d));
      EXPECT_EQ(r.n0, zero_count_projective(d, fx.spec, fx.field));
      EXPECT_EQ(r.rank, oracle_rank(fx, d));
      EXPECT_EQ(rank_of_form(d, fx.spec, fx.field).rank, r.rank);
    }
  }
}

TEST(ExpSum, HomogeneityOverThePrimeField) {
  const Fixture fx = make(5, 5, 1);
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const DeltaTriple d = random_delta(rng, fx.field);
    const FieldElement x = random_element(rng, fx.field);
    const std::uint32_t fx0 = f_delta(d, x, fx.spec, fx.field);
    for (std::uint32_t y = 1; y < 5; ++y) {
      const FieldElement yx = fx.field.mul(FieldElement{y}, x);
      EXPECT_EQ(f_delta(d, yx, fx.spec, fx.field), fx0 * y % 5);
    }
  }
}

TEST(ExpSum, SpecialDeltas) {
  const Fixture fx = make(3, 5, 1);
  const SValueReport zero = s_exact(DeltaTriple{}, fx.spec, fx.field);
  EXPECT_EQ(zero.s, 243);
  EXPECT_TRUE(rank_of_form(DeltaTriple{}, fx.spec, fx.field).zero_form);
  // (d0, 0, 0) with d0 != 0: a nonzero linear functional, S = 0; H is invertible.
  const DeltaTriple lin{fx.field.pi(), {}, {}};
  EXPECT_EQ(s_exact(lin, fx.spec, fx.field).s, 0);
  EXPECT_EQ(matrix_rank(build_linearized(lin, fx.spec, fx.field)), 5u);
  EXPECT_EQ(rank_of_form(lin, fx.spec, fx.field).rank, 5u);
}

TEST(ExpSum, RadicalAndLinearizedMapsHaveEqualRank) {
  const Fixture fx = make(3, 7, 2);
  std::mt19937_64 rng(29);
  for (int i = 0; i < 50; ++i) {
    const DeltaTriple d = random_delta(rng, fx.field);
    EXPECT_EQ(matrix_rank(build_linearized(d, fx.spec, fx.field)),
              matrix_rank(radical_map(d, fx.spec, fx.field)));
  }
}

TEST(ExpSum, SFromZeroCount) {
  EXPECT_EQ(s_from_zero_count(81, 3, 243), 0);
  EXPECT_EQ(s_from_zero_count(243, 3, 243), 243);
  EXPECT_EQ(s_from_zero_count(135, 3, 243), 81);
  EXPECT_THROW(s_from_zero_count(82, 3, 243), InvariantViolation);
}

TEST(ExpSum, RankSignRuleOnSamples) {
  const Fixture fx = make(3, 7, 2);
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    const DeltaTriple d = random_delta(rng, fx.field);
    const SValueReport r = s_exact(d, fx.spec, fx.field);
    if (r.rank % 2 == 1) {
      EXPECT_EQ(r.s, 0);
    } else {
      std::int64_t mag = 1;
      for (unsigned j = 0; j < 7 - r.rank / 2; ++j) mag *= 3;
      EXPECT_EQ(std::abs(r.s), mag);
    }
    EXPECT_GE(r.rank, 3u);
  }
}

TEST(ExpSum, FullDistributionStrategiesAgree) {
  const Fixture fx = make(3, 5, 2);
  const auto a = value_distribution_full(fx.spec, fx.field, {.jobs = 1});
  const auto b = value_distribution_full(fx.spec, fx.field, {.jobs = 3},
                                         {.with_ranks = true, .strategy = SumStrategy::RankFirst});
  const auto c = value_distribution_full(fx.spec, fx.field, {.jobs = 2}, {.with_ranks = true});
  EXPECT_EQ(a.frequencies, b.frequencies);
  EXPECT_EQ(a.frequencies, c.frequencies);
  EXPECT_EQ(b.rank_profile, c.rank_profile);
  EXPECT_EQ(a.total(), BigInt(243) * 243 * 243);
  // Same distribution as k = 1: both are covered by the same closed form.
  const FrequencyTable t = table1(3, 5);
  for (const auto& row : t.rows) EXPECT_EQ(a.frequencies.at(static_cast<std::int64_t>(row.label)), row.frequency);
  const auto moments = power_moments(a);
  EXPECT_EQ(moments, expected_moments(3, 5));
}

TEST(ExpSum, FullDistributionRespectsBudget) {
  const Fixture fx = make(3, 5, 1);
  EXPECT_THROW(value_distribution_full(fx.spec, fx.field, {.budget = 1000}), BudgetExceeded);
}

TEST(ExpSum, SampledValuesLieInTheSupport) {
  const Fixture fx = make(5, 5, 1);
  const auto dist = value_distribution_sampled(fx.spec, fx.field, {5000, 3}, {.jobs = 2});
  const FrequencyTable t = table1(5, 5);
  std::set<std::int64_t> support;
  for (const auto& row : t.rows) support.insert(static_cast<std::int64_t>(row.label));
  for (const auto& [s, f] : dist.frequencies) EXPECT_TRUE(support.count(s)) << s;
  EXPECT_EQ(dist.total(), 5000);
}
