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

#include "cwdw/closed_forms.hpp"
#include "cwdw/errors.hpp"

using namespace cwdw;

namespace {

std::map<std::uint64_t, BigInt> nonzero_weights(const FrequencyTable& t) {
  std::map<std::uint64_t, BigInt> out;
  for (const auto& row : t.rows) {
    if (row.label != 0) out[static_cast<std::uint64_t>(row.label)] = row.frequency;
  }
  return out;
}

// Moments sum_s s^t freq(s) of a value table, computed here directly.
BigInt moment(const FrequencyTable& t, unsigned power) {
  BigInt sum = 0;
  for (const auto& row : t.rows) sum += boost::multiprecision::pow(row.label, power) * row.frequency;
  return sum;
}

}  // namespace

TEST(ClosedForms, ReferenceEnumerators) {
  const auto refs = reference_enumerators();
  ASSERT_EQ(refs.size(), 3u);
  for (const auto& ref : refs) {
    EXPECT_EQ(nonzero_weights(table2(ref.p, ref.m)), ref.frequencies) << ref.p << "," << ref.m;
  }
  const auto ex1 = nonzero_weights(table2(3, 5));
  EXPECT_EQ(ex1.at(108), 14520);
  EXPECT_EQ(ex1.at(144), 2548260);
  EXPECT_EQ(ex1.at(162), 9740258);
  EXPECT_EQ(ex1.at(180), 2038608);
  EXPECT_EQ(ex1.at(216), 7260);
  const auto ex3 = nonzero_weights(table2(5, 5));
  EXPECT_EQ(ex3.at(2500), BigInt("24462797524"));
}

TEST(ClosedForms, TablesSumToTheCodeSize) {
  for (auto [p, m] : {std::pair{3u, 5u}, {3u, 7u}, {5u, 5u}, {7u, 5u}, {3u, 9u}, {11u, 7u}}) {
    const BigInt size = big_pow(p, 3 * m);
    EXPECT_EQ(table1(p, m).total(), size);
    EXPECT_EQ(table2(p, m).total(), size);
    EXPECT_EQ(table3(p, m, 1).rows.size(), table2(p, m).rows.size());
  }
}

TEST(ClosedForms, GeneralTableReducesToCoprimeTable) {
  for (auto [p, m] : {std::pair{3u, 5u}, {3u, 7u}, {5u, 5u}, {5u, 7u}}) {
    const FrequencyTable a = table3(p, m, 1);
    const FrequencyTable b = table2(p, m);
    ASSERT_EQ(a.rows.size(), b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
      EXPECT_EQ(a.rows[i].label, b.rows[i].label);
      EXPECT_EQ(a.rows[i].frequency, b.rows[i].frequency);
    }
  }
}

TEST(ClosedForms, GeneralTableAtThreeTenTwo) {
  const FrequencyTable t = table3(3, 10, 2);
  EXPECT_EQ(t.total(), big_pow(3, 30));
  for (const auto& row : t.rows) EXPECT_GT(row.frequency, 0);
  EXPECT_EQ(t.frequency(0), 1);
  EXPECT_EQ(t.frequency(39366), BigInt("183045715391528"));
  const FrequencyTable v = value_table(3, 10, 2);
  EXPECT_EQ(v.frequency(59049), 1);
  EXPECT_EQ(v.frequency(6561), 217887120);
  EXPECT_EQ(v.total(), t.total());
}

TEST(ClosedForms, ValueTableMomentsMatchTheCountingLemmas) {
  for (auto [p, m] : {std::pair{3u, 5u}, {3u, 7u}, {5u, 5u}, {7u, 7u}}) {
    const FrequencyTable t = table1(p, m);
    const auto expected = expected_moments(p, m);
    const auto computed = table_moments(t);
    for (unsigned i = 0; i < 4; ++i) {
      EXPECT_EQ(computed[i], expected[i]);
      EXPECT_EQ(moment(t, i + 1), expected[i]);
    }
    const BigInt q = big_pow(p, m);
    EXPECT_EQ(expected[0], q * q * q);
    EXPECT_EQ(expected[1], q * q * q * q);
    EXPECT_EQ(expected[2], q * q * q * (q * p + q - p));
    EXPECT_EQ(expected[3], q * q * q * q * (q * p + q - p));
  }
}

TEST(ClosedForms, MomentSystemSolutionMatchesTable) {
  for (auto [p, m] : {std::pair{3u, 5u}, {3u, 7u}, {5u, 5u}}) {
    const FrequencyTable t = table1(p, m);
    const FrequencyUnknowns u = solve_frequency_system(p, m);
    const BigInt small = big_pow(p, (m + 1) / 2);
    const BigInt large = big_pow(p, (m + 3) / 2);
    EXPECT_EQ(u.small_plus, t.frequency(small));
    EXPECT_EQ(u.small_minus, t.frequency(-small));
    EXPECT_EQ(u.large_plus, t.frequency(large));
    EXPECT_EQ(u.large_minus, t.frequency(-large));
  }
}

TEST(ClosedForms, EnumeratorString) {
  EXPECT_EQ(weight_enumerator_string(table2(3, 5)),
            "1+14520z^108+2548260z^144+9740258z^162+2038608z^180+7260z^216");
}

TEST(ClosedForms, RejectsInvalidRegimes) {
  EXPECT_THROW(table1(3, 4), ParameterError);
  EXPECT_THROW(table2(3, 3), ParameterError);
  EXPECT_THROW(table3(3, 10, 3), ParameterError);
  EXPECT_THROW(table3(4, 5, 1), ParameterError);
}
