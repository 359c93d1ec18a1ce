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

#include "cwdw/closed_forms.hpp"

#include <algorithm>
#include <sstream>

#include "cwdw/errors.hpp"
#include "cwdw/number_theory.hpp"

namespace cwdw {

namespace {

BigInt exact_div(const BigInt& num, const BigInt& den) {
  if (den == 0 || num % den != 0) {
    throw InvariantViolation("non-exact division " + num.str() + " / " + den.str());
  }
  return num / den;
}

void check_prime(std::uint32_t p) {
  if (p < 3 || !is_prime(p)) throw ParameterError("p must be an odd prime");
}

void check_regime(std::uint32_t p, unsigned m, unsigned e) {
  check_prime(p);
  if (e == 0 || m % e != 0) throw ParameterError("e must divide m");
  if ((m / e) % 2 == 0) throw ParameterError("m / e must be odd");
  if (m / e < 5) throw ParameterError("m / e must be at least 5");
}

void sort_rows(FrequencyTable& t) {
  std::sort(t.rows.begin(), t.rows.end(),
            [](const FrequencyRow& a, const FrequencyRow& b) { return a.label < b.label; });
}

}  // namespace

std::string to_string(TableKind kind) {
  switch (kind) {
    case TableKind::ValueDistribution: return "values";
    case TableKind::WeightDistribution: return "weights";
    case TableKind::GeneralWeights: return "general-weights";
    case TableKind::GeneralValues: return "general-values";
  }
  return "?";
}

BigInt FrequencyTable::total() const {
  BigInt t = 0;
  for (const auto& r : rows) t += r.frequency;
  return t;
}

BigInt FrequencyTable::frequency(const BigInt& label) const {
  for (const auto& r : rows) {
    if (r.label == label) return r.frequency;
  }
  return 0;
}

FrequencyTable table1(std::uint32_t p, unsigned m) {
  check_regime(p, m, 1);
  auto P = [p](unsigned ex) { return big_pow(p, ex); };
  const BigInt den = 2 * (P(2) - 1);
  const BigInt zero_rows =
      (P(m) - 1) * (P(2 * m) - P(2 * m - 1) + P(2 * m - 4) + P(m) - P(m - 1) - P(m - 3) + 1);
  const BigInt small_tail = P(2 * m) - P(2 * m - 2) - P(2 * m - 3) + P(m - 2) + P(m - 3) - 1;
  const BigInt large_tail = (P(m - 1) - 1) * (P(m) - 1);

  FrequencyTable t;
  t.kind = TableKind::ValueDistribution;
  t.p = p;
  t.m = m;
  t.e = 1;
  t.rows = {
      {P(m), 1},
      {0, zero_rows},
      {P((m + 1) / 2), exact_div((P(m + 1) + P((m + 3) / 2)) * small_tail, den)},
      {-P((m + 1) / 2), exact_div((P(m + 1) - P((m + 3) / 2)) * small_tail, den)},
      {P((m + 3) / 2), exact_div((P(m - 3) + P((m - 3) / 2)) * large_tail, den)},
      // Mirror image of the row above; the moment system pins it down.
      {-P((m + 3) / 2), exact_div((P(m - 3) - P((m - 3) / 2)) * large_tail, den)},
  };
  sort_rows(t);
  return t;
}

FrequencyTable table2(std::uint32_t p, unsigned m) {
  check_regime(p, m, 1);
  auto P = [p](unsigned ex) { return big_pow(p, ex); };
  const BigInt pm1 = p - 1;
  const BigInt den = 2 * (P(2) - 1);
  const BigInt mid = P(2 * m) - P(2 * m - 2) - P(2 * m - 3) + P(m - 2) + P(m - 3) - 1;
  const BigInt outer = (P(m - 1) - 1) * (P(m) - 1);

  FrequencyTable t;
  t.kind = TableKind::WeightDistribution;
  t.p = p;
  t.m = m;
  t.e = 1;
  t.rows = {
      {0, 1},
      {pm1 * P(m - 1),
       (P(m) - 1) * (P(2 * m) - P(2 * m - 1) + P(2 * m - 4) + P(m) - P(m - 1) - P(m - 3) + 1)},
      {pm1 * (P(m - 1) - P((m - 1) / 2)), exact_div((P(m + 1) + P((m + 3) / 2)) * mid, den)},
      {pm1 * (P(m - 1) + P((m - 1) / 2)), exact_div((P(m + 1) - P((m + 3) / 2)) * mid, den)},
      {pm1 * (P(m - 1) - P((m + 1) / 2)), exact_div((P(m - 3) + P((m - 3) / 2)) * outer, den)},
      {pm1 * (P(m - 1) + P((m + 1) / 2)), exact_div((P(m - 3) - P((m - 3) / 2)) * outer, den)},
  };
  sort_rows(t);
  return t;
}

FrequencyTable table3(std::uint32_t p, unsigned m, unsigned e) {
  check_regime(p, m, e);
  auto P = [p](unsigned ex) { return big_pow(p, ex); };
  const BigInt pm1 = p - 1;
  const BigInt den = 2 * (P(2 * e) - 1);
  const BigInt mid =
      P(2 * m) - P(2 * m - 2 * e) - P(2 * m - 3 * e) + P(m - 2 * e) + P(m - 3 * e) - 1;
  const BigInt outer = (P(m - e) - 1) * (P(m) - 1);

  FrequencyTable t;
  t.kind = TableKind::GeneralWeights;
  t.p = p;
  t.m = m;
  t.e = e;
  t.rows = {
      {0, 1},
      {pm1 * P(m - 1), (P(m) - 1) * (P(2 * m) - P(2 * m - e) + P(2 * m - 4 * e) + P(m) -
                                     P(m - e) - P(m - 3 * e) + 1)},
      {pm1 * (P(m - 1) - P((m + e - 2) / 2)),
       exact_div((P(m + e) + P((m + 3 * e) / 2)) * mid, den)},
      {pm1 * (P(m - 1) + P((m + e - 2) / 2)),
       exact_div((P(m + e) - P((m + 3 * e) / 2)) * mid, den)},
      {pm1 * (P(m - 1) - P((m + 3 * e - 2) / 2)),
       exact_div((P(m - 3 * e) + P((m - 3 * e) / 2)) * outer, den)},
      {pm1 * (P(m - 1) + P((m + 3 * e - 2) / 2)),
       exact_div((P(m - 3 * e) - P((m - 3 * e) / 2)) * outer, den)},
  };
  sort_rows(t);
  return t;
}

FrequencyTable value_table(std::uint32_t p, unsigned m, unsigned e) {
  if (e == 1) return table1(p, m);
  const FrequencyTable weights = table3(p, m, e);
  FrequencyTable t;
  t.kind = TableKind::GeneralValues;
  t.p = p;
  t.m = m;
  t.e = e;
  const BigInt q = big_pow(p, m);
  for (const auto& row : weights.rows) {
    t.rows.push_back({q - exact_div(BigInt(p) * row.label, BigInt(p - 1)), row.frequency});
  }
  sort_rows(t);
  return t;
}

std::array<BigInt, 4> expected_moments(std::uint32_t p, unsigned m) {
  const BigInt factor = big_pow(p, m + 1) + big_pow(p, m) - p;
  return {big_pow(p, 3 * m), big_pow(p, 4 * m), big_pow(p, 3 * m) * factor,
          big_pow(p, 4 * m) * factor};
}

std::array<BigInt, 4> table_moments(const FrequencyTable& table) {
  std::array<BigInt, 4> out{0, 0, 0, 0};
  for (const auto& row : table.rows) {
    BigInt term = row.frequency;
    for (int t = 0; t < 4; ++t) {
      term *= row.label;
      out[t] += term;
    }
  }
  return out;
}

FrequencyUnknowns solve_frequency_system(std::uint32_t p, unsigned m) {
  check_regime(p, m, 1);
  auto P = [p](unsigned ex) { return BigRational(big_pow(p, ex)); };
  const auto moments = expected_moments(p, m);
  // Unknowns: n(+small), n(-small), n(+large), n(-large).
  std::array<std::array<BigRational, 5>, 4> a{{
      {P((m + 1) / 2), -P((m + 1) / 2), P((m + 3) / 2), -P((m + 3) / 2),
       BigRational(moments[0]) - P(m)},
      {P(m + 1), P(m + 1), P(m + 3), P(m + 3), BigRational(moments[1]) - P(2 * m)},
      {P((3 * m + 3) / 2), -P((3 * m + 3) / 2), P((3 * m + 9) / 2), -P((3 * m + 9) / 2),
       BigRational(moments[2]) - P(3 * m)},
      {P(2 * m + 2), P(2 * m + 2), P(2 * m + 6), P(2 * m + 6),
       BigRational(moments[3]) - P(4 * m)},
  }};
  for (int c = 0; c < 4; ++c) {
    int pivot = c;
    while (pivot < 4 && a[pivot][c] == 0) ++pivot;
    if (pivot == 4) throw InvariantViolation("moment system is singular");
    std::swap(a[c], a[pivot]);
    for (int r = 0; r < 4; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const BigRational f = a[r][c] / a[c][c];
      for (int j = c; j < 5; ++j) a[r][j] -= f * a[c][j];
    }
  }
  std::array<BigInt, 4> sol;
  for (int i = 0; i < 4; ++i) {
    const BigRational v = a[i][4] / a[i][i];
    if (boost::multiprecision::denominator(v) != 1) {
      throw InvariantViolation("moment system solution is not integral");
    }
    sol[i] = boost::multiprecision::numerator(v);
  }
  return {sol[0], sol[1], sol[2], sol[3]};
}

std::string weight_enumerator_string(const FrequencyTable& table) {
  std::ostringstream os;
  bool first = true;
  for (const auto& row : table.rows) {
    if (row.frequency == 0) continue;
    if (!first) os << '+';
    first = false;
    if (row.label == 0) {
      os << row.frequency;
    } else {
      os << row.frequency << "z^" << row.label;
    }
  }
  return os.str();
}

std::vector<ReferenceEnumerator> reference_enumerators() {
  return {
      {3, 5, 1, {{108, 14520}, {144, 2548260}, {162, 9740258}, {180, 2038608}, {216, 7260}}},
      {3, 7, 2,
       {{1296, 8951670},
        {1404, 1732767876},
        {1458, BigInt("7102473578")},
        {1512, 1608998742},
        {1620, 7161336}}},
      {5, 5, 1,
       {{2000, 1218360},
        {2400, BigInt("3147430000")},
        {2500, BigInt("24462797524")},
        {2600, BigInt("2905320000")},
        {3000, 812240}}},
  };
}

}  // namespace cwdw
