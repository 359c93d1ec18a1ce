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

#include "cwdw/lemmas.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <utility>

#include "cwdw/closed_forms.hpp"
#include "cwdw/errors.hpp"
#include "cwdw/number_theory.hpp"

namespace cwdw {
namespace {

// x^{d1} and x^{d2} for every packed element x.
struct PowerTables {
  std::vector<std::uint64_t> p1;
  std::vector<std::uint64_t> p2;
};

PowerTables power_tables(const CodeSpec& spec, const GaloisField& field) {
  PowerTables t;
  t.p1.resize(field.q());
  t.p2.resize(field.q());
  for (std::uint64_t i = 0; i < field.q(); ++i) {
    const FieldElement x{i};
    t.p1[i] = field.pow(x, spec.d1_mod).packed;
    t.p2[i] = field.pow(x, spec.d2_mod).packed;
  }
  return t;
}

std::uint64_t add(const GaloisField& f, std::uint64_t a, std::uint64_t b) {
  return f.add(FieldElement{a}, FieldElement{b}).packed;
}

std::uint64_t sub(const GaloisField& f, std::uint64_t a, std::uint64_t b) {
  return f.sub(FieldElement{a}, FieldElement{b}).packed;
}

void require_pairs_budget(const GaloisField& field, const RunOptions& options, const std::string& what) {
  const BigInt q = field.q();
  require_budget(q * q, options.budget, what);
}

bool histograms_equal(const std::vector<HistogramEntry>& a, const std::vector<HistogramEntry>& b) {
  return a == b;
}

// Builds a histogram from (count -> multiplicity), dropping zero multiplicities.
std::vector<HistogramEntry> to_histogram(const std::map<std::uint64_t, BigInt>& counts) {
  std::vector<HistogramEntry> out;
  for (const auto& [count, mult] : counts) {
    if (mult != 0) out.push_back({count, mult});
  }
  return out;
}

void finish(CountReport& r) {
  bool ok = !r.predicted || r.computed == *r.predicted;
  if (!r.predicted_histogram.empty()) ok = ok && histograms_equal(r.histogram, r.predicted_histogram);
  for (const auto& c : r.checks) {
    if (c.asserted && !c.match()) ok = false;
  }
  r.match = ok;
}

// Unit-system solutions x (with y = 1 - x), sorted by key b * q + c.
struct UnitBuckets {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;  // (key, x)
  std::uint64_t zero_bc = 0;  // solutions with b = 0 or c = 0
};

UnitBuckets unit_buckets(const GaloisField& field, const PowerTables& t) {
  const std::uint64_t q = field.q();
  UnitBuckets u;
  u.entries.reserve(q);
  for (std::uint64_t x = 0; x < q; ++x) {
    const std::uint64_t y = sub(field, 1, x);
    const std::uint64_t b = add(field, t.p1[x], t.p1[y]);
    const std::uint64_t c = add(field, t.p2[x], t.p2[y]);
    if (b == 0 || c == 0) ++u.zero_bc;
    u.entries.emplace_back(b * q + c, x);
  }
  std::sort(u.entries.begin(), u.entries.end());
  return u;
}

std::uint64_t unit_count(const UnitBuckets& u, std::uint64_t key) {
  const auto lo = std::lower_bound(u.entries.begin(), u.entries.end(),
                                   std::make_pair(key, std::uint64_t{0}));
  auto hi = lo;
  while (hi != u.entries.end() && hi->first == key) ++hi;
  return static_cast<std::uint64_t>(hi - lo);
}

template <class Fn>
void for_each_run(const UnitBuckets& u, Fn fn) {
  std::size_t i = 0;
  while (i < u.entries.size()) {
    std::size_t j = i;
    while (j < u.entries.size() && u.entries[j].first == u.entries[i].first) ++j;
    fn(u.entries[i].first, i, j);
    i = j;
  }
}

BigInt nonzero_pairs(std::uint64_t q) {
  const BigInt n = q - 1;
  return n * n;
}

int class_index(ResidueClass c) {
  switch (c) {
    case ResidueClass::Zero: return 0;
    case ResidueClass::Square: return 1;
    case ResidueClass::NonSquare: return 2;
  }
  return 0;
}

const std::array<const char*, 3> kClassNames = {"zero", "square", "nonsquare"};

bool case_predicate(int which, ResidueClass x, ResidueClass y) {
  using RC = ResidueClass;
  switch (which) {
    case 1: return x == RC::Square && y != RC::Square;
    case 2: return y == RC::Square && x != RC::Square;
    case 3: return x != RC::NonSquare && y != RC::NonSquare;
    case 4: return x != RC::Square && y != RC::Square;
  }
  throw ParameterError("case must be 1, 2, 3 or 4");
}

}  // namespace

CountReport count_n2(const CodeSpec& spec, const GaloisField& field, const RunOptions& options) {
  require_pairs_budget(field, options, "N2 brute force");
  const PowerTables t = power_tables(spec, field);
  const std::uint64_t q = field.q();
  const std::uint64_t total = parallel_reduce(
      q, resolve_jobs(options.jobs), std::uint64_t{0},
      [&](std::uint64_t begin, std::uint64_t end, std::uint64_t& acc) {
        for (std::uint64_t x = begin; x < end; ++x) {
          for (std::uint64_t y = 0; y < q; ++y) {
            if (add(field, x, y) == 0 && add(field, t.p1[x], t.p1[y]) == 0 &&
                add(field, t.p2[x], t.p2[y]) == 0) {
              ++acc;
            }
          }
        }
      },
      [](std::uint64_t& into, const std::uint64_t& from) { into += from; });
  CountReport r{.lemma = "N2", .spec = spec, .computed = total, .predicted = BigInt(q)};
  finish(r);
  return r;
}

CountReport count_n3(const CodeSpec& spec, const GaloisField& field, const RunOptions& options) {
  require_pairs_budget(field, options, "N3 brute force");
  const PowerTables t = power_tables(spec, field);
  const std::uint64_t q = field.q();
  const std::uint64_t total = parallel_reduce(
      q, resolve_jobs(options.jobs), std::uint64_t{0},
      [&](std::uint64_t begin, std::uint64_t end, std::uint64_t& acc) {
        for (std::uint64_t x = begin; x < end; ++x) {
          for (std::uint64_t y = 0; y < q; ++y) {
            const std::uint64_t u = field.neg(FieldElement{add(field, x, y)}).packed;
            if (add(field, add(field, t.p1[x], t.p1[y]), t.p1[u]) == 0 &&
                add(field, add(field, t.p2[x], t.p2[y]), t.p2[u]) == 0) {
              ++acc;
            }
          }
        }
      },
      [](std::uint64_t& into, const std::uint64_t& from) { into += from; });
  const BigInt bq = q;
  CountReport r{.lemma = "N3", .spec = spec, .computed = total, .predicted = bq * spec.p + bq - spec.p};
  finish(r);
  return r;
}

CountReport count_n4(const CodeSpec& spec, const GaloisField& field, const RunOptions& options) {
  require_pairs_budget(field, options, "N4 bucket count");
  const PowerTables t = power_tables(spec, field);
  const std::uint64_t q = field.q();
  struct Acc {
    std::uint64_t sq_a_zero = 0;
    std::uint64_t sq_a_nonzero = 0;
    std::uint64_t pairs = 0;
    std::uint64_t zero_bc = 0;
  };
  const Acc acc = parallel_reduce(
      q, resolve_jobs(options.jobs), Acc{},
      [&](std::uint64_t begin, std::uint64_t end, Acc& a) {
        std::vector<std::uint64_t> keys(q);
        for (std::uint64_t abar = begin; abar < end; ++abar) {
          for (std::uint64_t x = 0; x < q; ++x) {
            const std::uint64_t y = sub(field, abar, x);
            const std::uint64_t b = add(field, t.p1[x], t.p1[y]);
            const std::uint64_t c = add(field, t.p2[x], t.p2[y]);
            if (abar != 0 && (b == 0 || c == 0)) ++a.zero_bc;
            keys[x] = b * q + c;
          }
          std::sort(keys.begin(), keys.end());
          std::uint64_t sq = 0;
          std::size_t i = 0;
          while (i < keys.size()) {
            std::size_t j = i;
            while (j < keys.size() && keys[j] == keys[i]) ++j;
            const std::uint64_t n = j - i;
            sq += n * n;
            a.pairs += n;
            i = j;
          }
          (abar == 0 ? a.sq_a_zero : a.sq_a_nonzero) += sq;
        }
      },
      [](Acc& into, const Acc& from) {
        into.sq_a_zero += from.sq_a_zero;
        into.sq_a_nonzero += from.sq_a_nonzero;
        into.pairs += from.pairs;
        into.zero_bc += from.zero_bc;
      });
  const BigInt bq = q;
  const BigInt p = spec.p;
  CountReport r{.lemma = "N4",
                .spec = spec,
                .computed = BigInt(acc.sq_a_zero) + acc.sq_a_nonzero,
                .predicted = bq * (bq * p + bq - p)};
  r.checks.push_back({"sum of bucket sizes", acc.pairs, bq * bq});
  r.checks.push_back({"squares over a = 0", acc.sq_a_zero, bq * bq});
  r.checks.push_back({"squares over a != 0", acc.sq_a_nonzero, bq * (bq * p - p)});
  r.checks.push_back({"a != 0 solutions with b = 0 or c = 0", acc.zero_bc, BigInt(0)});
  finish(r);
  return r;
}

CountReport unit_system_histogram(const CodeSpec& spec, const GaloisField& field) {
  const PowerTables t = power_tables(spec, field);
  const std::uint64_t q = field.q();
  const std::uint64_t p = spec.p;
  const UnitBuckets u = unit_buckets(field, t);
  const std::uint64_t one_one = q + 1;  // key of (b, c) = (1, 1)

  std::map<std::uint64_t, BigInt> counts;
  BigInt occupied = 0;
  std::uint64_t at_one_one = 0;
  bool one_one_is_prime_field = false;
  for_each_run(u, [&](std::uint64_t key, std::size_t i, std::size_t j) {
    const std::uint64_t b = key / q;
    const std::uint64_t c = key % q;
    if (b == 0 || c == 0) return;
    counts[j - i] += 1;
    occupied += 1;
    if (key == one_one) {
      at_one_one = j - i;
      std::vector<std::uint64_t> xs;
      for (std::size_t s = i; s < j; ++s) xs.push_back(u.entries[s].second);
      std::sort(xs.begin(), xs.end());
      one_one_is_prime_field = xs.size() == p;
      for (std::uint64_t v = 0; v < xs.size() && one_one_is_prime_field; ++v) {
        // Elements of F_p are the packed values 0 .. p-1.
        one_one_is_prime_field = xs[v] == v;
      }
    }
  });
  counts[0] += nonzero_pairs(q) - occupied;

  std::map<std::uint64_t, BigInt> predicted;
  const BigInt plus = BigInt(q - p) / (2 * (p + 1));
  const BigInt minus = BigInt(q - p) / (2 * (p - 1));
  predicted[p] += 1;
  predicted[p + 1] += plus;
  predicted[p - 1] += minus;
  predicted[0] += nonzero_pairs(q) - 1 - plus - minus;

  CountReport r{.lemma = "unit-system", .spec = spec, .computed = at_one_one, .predicted = BigInt(p)};
  r.histogram = to_histogram(counts);
  r.predicted_histogram = to_histogram(predicted);
  r.checks.push_back({"sum of bucket sizes", BigInt(u.entries.size()), BigInt(q)});
  r.checks.push_back({"solutions with b = 0 or c = 0", u.zero_bc, BigInt(0)});
  r.checks.push_back({"(1,1) bucket is F_p", one_one_is_prime_field ? 1 : 0, BigInt(1)});
  finish(r);
  return r;
}

CountReport scaling_reduction_check(const CodeSpec& spec, const GaloisField& field,
                                    std::uint64_t samples, std::uint64_t seed) {
  const PowerTables t = power_tables(spec, field);
  const std::uint64_t q = field.q();
  const UnitBuckets u = unit_buckets(field, t);
  std::mt19937_64 rng(seed);

  const auto system_count = [&](std::uint64_t abar, std::uint64_t bbar, std::uint64_t cbar) {
    std::uint64_t n = 0;
    for (std::uint64_t x = 0; x < q; ++x) {
      const std::uint64_t y = sub(field, abar, x);
      if (add(field, t.p1[x], t.p1[y]) == bbar && add(field, t.p2[x], t.p2[y]) == cbar) ++n;
    }
    return n;
  };

  std::uint64_t agree = 0;
  std::uint64_t nonzero_samples = 0;
  std::uint64_t zero_bc = 0;
  std::uint64_t identity_mismatch = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const FieldElement a = random_nonzero(rng, field);
    std::uint64_t bbar = 0;
    std::uint64_t cbar = 0;
    if (s % 2 == 0) {
      // Half the samples hit occupied buckets; uniform (b, c) are almost always empty.
      const std::uint64_t x = random_element(rng, field).packed;
      const std::uint64_t y = sub(field, a.packed, x);
      bbar = add(field, t.p1[x], t.p1[y]);
      cbar = add(field, t.p2[x], t.p2[y]);
    } else {
      bbar = random_element(rng, field).packed;
      cbar = random_element(rng, field).packed;
    }
    const std::uint64_t lhs = system_count(a.packed, bbar, cbar);
    if (lhs > 0) ++nonzero_samples;
    const FieldElement b = field.div(FieldElement{bbar}, FieldElement{t.p1[a.packed]});
    const FieldElement c = field.div(FieldElement{cbar}, FieldElement{t.p2[a.packed]});
    const std::uint64_t rhs = unit_count(u, b.packed * q + c.packed);
    if (lhs == rhs) ++agree;

    // Case b = 0 or c = 0 never occurs for a != 0.
    zero_bc += system_count(a.packed, 0, cbar) + system_count(a.packed, bbar, 0);
  }
  // At a = 1 the reduction is the identity.
  for (std::uint64_t s = 0; s < std::min<std::uint64_t>(samples, 8); ++s) {
    const std::uint64_t x = random_element(rng, field).packed;
    const std::uint64_t y = sub(field, 1, x);
    const std::uint64_t key = add(field, t.p1[x], t.p1[y]) * q + add(field, t.p2[x], t.p2[y]);
    if (system_count(1, key / q, key % q) != unit_count(u, key)) ++identity_mismatch;
  }

  CountReport r{.lemma = "scaling", .spec = spec, .computed = agree, .predicted = BigInt(samples)};
  r.checks.push_back({"samples with a nonempty bucket", nonzero_samples, std::nullopt, false});
  r.checks.push_back({"sampled solutions with b = 0 or c = 0", zero_bc, BigInt(0)});
  r.checks.push_back({"identity reduction mismatches at a = 1", identity_mismatch, BigInt(0)});
  finish(r);
  return r;
}

CountReport residue_class_breakdown(const CodeSpec& spec, const GaloisField& field) {
  const PowerTables t = power_tables(spec, field);
  const std::uint64_t q = field.q();
  const std::uint64_t p = spec.p;
  const UnitBuckets u = unit_buckets(field, t);

  // Class tags computed in a separate pass, keyed the same way.
  std::vector<std::pair<std::uint64_t, int>> tagged;
  tagged.reserve(q);
  for (std::uint64_t x = 0; x < q; ++x) {
    const std::uint64_t y = sub(field, 1, x);
    const std::uint64_t key = add(field, t.p1[x], t.p1[y]) * q + add(field, t.p2[x], t.p2[y]);
    const int tag = 3 * class_index(field.residue_class(FieldElement{x})) +
                    class_index(field.residue_class(FieldElement{y}));
    tagged.emplace_back(key, tag);
  }
  std::sort(tagged.begin(), tagged.end());

  std::uint64_t disagreeing = 0;
  std::array<std::uint64_t, 9> at_one_one{};
  std::size_t pos = 0;
  for_each_run(u, [&](std::uint64_t key, std::size_t i, std::size_t j) {
    std::array<std::uint64_t, 9> classes{};
    while (pos < tagged.size() && tagged[pos].first < key) ++pos;
    while (pos < tagged.size() && tagged[pos].first == key) ++classes[tagged[pos++].second];
    std::uint64_t sum = 0;
    for (auto c : classes) sum += c;
    if (sum != j - i) ++disagreeing;
    if (key == q + 1) at_one_one = classes;
  });

  std::uint64_t total = 0;
  for (auto c : at_one_one) total += c;
  CountReport r{.lemma = "residue-classes", .spec = spec, .computed = total, .predicted = BigInt(p)};
  r.checks.push_back({"buckets where classes do not sum to the bucket size", disagreeing, BigInt(0)});
  for (int tag = 0; tag < 9; ++tag) {
    if (at_one_one[tag] == 0) continue;
    r.checks.push_back({std::string("(1,1) x ") + kClassNames[tag / 3] + ", y " + kClassNames[tag % 3],
                        at_one_one[tag], std::nullopt, false});
  }
  finish(r);
  return r;
}

CountReport residue_case_histogram(const CodeSpec& spec, const GaloisField& field, int which) {
  if (which < 1 || which > 4) throw ParameterError("case must be 1, 2, 3 or 4");
  const PowerTables t = power_tables(spec, field);
  const std::uint64_t q = field.q();
  const std::uint64_t p = spec.p;
  const bool three_mod_four = p % 4 == 3;
  const UnitBuckets u = unit_buckets(field, t);

  std::map<std::uint64_t, BigInt> counts;
  BigInt occupied = 0;
  std::uint64_t away_total = 0;
  std::uint64_t at_one_one = 0;
  for_each_run(u, [&](std::uint64_t key, std::size_t i, std::size_t j) {
    const std::uint64_t b = key / q;
    const std::uint64_t c = key % q;
    if (b == 0 || c == 0) return;
    std::uint64_t n = 0;
    for (std::size_t s = i; s < j; ++s) {
      const std::uint64_t x = u.entries[s].second;
      const std::uint64_t y = sub(field, 1, x);
      if (case_predicate(which, field.residue_class(FieldElement{x}), field.residue_class(FieldElement{y}))) ++n;
    }
    if (key == q + 1) {
      at_one_one = n;
      return;
    }
    away_total += n;
    if (n > 0) {
      counts[n] += 1;
      occupied += 1;
    }
  });
  const BigInt pairs = nonzero_pairs(q) - 1;  // (b, c) != (1, 1)
  counts[0] += pairs - occupied;

  // Cases 1 and 2 live on the p - 1 buckets, cases 3 and 4 on the p + 1 buckets.
  const bool small = which <= 2;
  const std::uint64_t size = small ? (p - 1) / 2 : (p + 1) / 2;
  const BigInt times = BigInt(q - p) / (2 * (small ? p - 1 : p + 1));
  std::map<std::uint64_t, BigInt> predicted;
  predicted[size] += times;
  predicted[0] += pairs - times;

  CountReport r{.lemma = "case-" + std::to_string(which),
                .spec = spec,
                .computed = away_total,
                .predicted = times * size,
                .asserted = three_mod_four};
  r.histogram = to_histogram(counts);
  r.predicted_histogram = to_histogram(predicted);
  std::optional<BigInt> at_pred;
  if (three_mod_four) {
    static constexpr std::array<std::uint64_t, 4> offset = {1, 1, 5, 0};
    // (p+1)/4, (p+1)/4, (p+5)/4, (p-3)/4
    at_pred = which == 4 ? BigInt((p - 3) / 4) : BigInt((p + offset[which - 1]) / 4);
  }
  r.checks.push_back({"count at (1,1)", at_one_one, at_pred, false});
  finish(r);
  return r;
}

CountReport curve_system_histogram(const CodeSpec& spec, const GaloisField& field, CurveForm form,
                                   const RunOptions& options) {
  require_pairs_budget(field, options, "curve brute force");
  const std::uint64_t q = field.q();
  const std::uint64_t p = spec.p;
  const bool diff = form == CurveForm::Difference;
  const std::uint64_t k = spec.k % spec.m;
  // x^{p^{2k}+1}, exponent reduced mod q - 1.
  const std::uint64_t e = (powmod_u64(p, 2 * k, q - 1) + 1) % (q - 1);
  std::vector<std::uint64_t> sq(q);
  std::vector<std::uint64_t> pw(q);
  for (std::uint64_t i = 0; i < q; ++i) {
    sq[i] = field.mul(FieldElement{i}, FieldElement{i}).packed;
    pw[i] = i == 0 ? 0 : field.pow(FieldElement{i}, e == 0 ? q - 1 : e).packed;
  }
  const auto combine = [&](std::uint64_t a, std::uint64_t b) {
    return diff ? sub(field, a, b) : add(field, a, b);
  };

  const std::vector<std::uint64_t> per_b = parallel_reduce(
      q, resolve_jobs(options.jobs), std::vector<std::uint64_t>(q, 0),
      [&](std::uint64_t begin, std::uint64_t end, std::vector<std::uint64_t>& acc) {
        for (std::uint64_t x = begin; x < end; ++x) {
          for (std::uint64_t y = 0; y < q; ++y) {
            if (combine(sq[x], sq[y]) == 1) ++acc[combine(pw[x], pw[y])];
          }
        }
      },
      add_counts);

  std::map<std::uint64_t, BigInt> counts;
  std::uint64_t total = 0;
  for (std::uint64_t b = 0; b < q; ++b) {
    total += per_b[b];
    if (b != 1) counts[per_b[b]] += 1;
  }
  const std::uint64_t at_one = diff ? p - 1 : p + 1;
  const BigInt times = BigInt(q - p) / (2 * (diff ? p - 1 : p + 1));
  std::map<std::uint64_t, BigInt> predicted;
  predicted[2 * at_one] += times;
  predicted[0] += BigInt(q - 1) - times;

  // Points on x^2 - y^2 = 1 number q - 1; on x^2 + y^2 = 1, q - eta(-1).
  const bool minus_one_square = field.residue_class(field.from_int(-1)) == ResidueClass::Square;
  const BigInt conic = diff ? BigInt(q - 1) : (minus_one_square ? BigInt(q - 1) : BigInt(q + 1));

  CountReport r{.lemma = diff ? "curve-difference" : "curve-sum",
                .spec = spec,
                .computed = total,
                .predicted = conic,
                .asserted = p % 4 == 3};
  r.histogram = to_histogram(counts);
  r.predicted_histogram = to_histogram(predicted);
  r.checks.push_back({"count at b = 1", per_b[1], BigInt(at_one)});
  finish(r);
  return r;
}

namespace {

bool rank_sign_consistent(unsigned rank, std::int64_t s, std::uint32_t p, unsigned m) {
  if (rank % 2 == 1) return s == 0;
  if (rank / 2 > m) return false;
  const BigInt mag = big_pow(p, m - rank / 2);
  return BigInt(s < 0 ? -s : s) == mag;
}

struct RankTally {
  BigInt consistent = 0;
  BigInt total = 0;
  BigInt below_range = 0;
  unsigned min_rank = ~0u;
  unsigned max_rank = 0;

  void add(unsigned rank, std::int64_t s, const BigInt& count, const CodeSpec& spec) {
    total += count;
    if (rank_sign_consistent(rank, s, spec.p, spec.m)) consistent += count;
    if (rank == 0) return;  // Delta = 0
    if (rank + 4 * static_cast<std::uint64_t>(spec.e) < spec.m) below_range += count;
    min_rank = std::min(min_rank, rank);
    max_rank = std::max(max_rank, rank);
  }
};

CountReport rank_report(const std::string& lemma, const CodeSpec& spec, const RankTally& t) {
  CountReport r{.lemma = lemma, .spec = spec, .computed = t.consistent, .predicted = t.total};
  r.checks.push_back({"Delta with rank below m - 4e", t.below_range, BigInt(0), spec.e == 1});
  if (t.max_rank > 0) {
    r.checks.push_back({"smallest nonzero rank", t.min_rank, std::nullopt, false});
    r.checks.push_back({"largest rank", t.max_rank, std::nullopt, false});
  }
  finish(r);
  return r;
}

}  // namespace

CountReport rank_sign_consistency(const ValueDistribution& dist) {
  if (dist.rank_profile.empty()) throw ParameterError("distribution was computed without ranks");
  RankTally t;
  for (const auto& [key, count] : dist.rank_profile) t.add(key.first, key.second, count, dist.spec);
  return rank_report("rank-sign", dist.spec, t);
}

CountReport rank_sign_sampled(const CodeSpec& spec, const GaloisField& field, std::uint64_t samples,
                              std::uint64_t seed, const RunOptions& options) {
  if (samples == 0) throw ParameterError("sample size must be positive");
  require_budget(BigInt(samples) * field.q(), options.budget, "sampled rank check");
  std::mt19937_64 rng(seed);
  std::vector<DeltaTriple> deltas;
  deltas.reserve(samples);
  while (deltas.size() < samples) {
    const DeltaTriple d = random_delta(rng, field);
    if (!d.is_zero()) deltas.push_back(d);
  }
  std::vector<std::pair<unsigned, std::int64_t>> results(samples);
  parallel_reduce(
      samples, resolve_jobs(options.jobs), 0,
      [&](std::uint64_t begin, std::uint64_t end, int&) {
        for (std::uint64_t i = begin; i < end; ++i) {
          const SValueReport v = s_exact(deltas[i], spec, field);
          results[i] = {v.rank, v.s};
        }
      },
      [](int&, const int&) {});
  RankTally t;
  for (const auto& [rank, s] : results) t.add(rank, s, 1, spec);
  return rank_report("rank-sign-sampled", spec, t);
}

std::vector<CountReport> moment_reports(const ValueDistribution& dist) {
  const auto computed = power_moments(dist);
  const bool closed = dist.spec.e == 1 && dist.method == "full";
  std::array<BigInt, 4> expected{};
  if (closed) expected = expected_moments(dist.spec.p, dist.spec.m);
  std::vector<CountReport> out;
  for (int t = 0; t < 4; ++t) {
    CountReport r{.lemma = "moment-" + std::to_string(t + 1), .spec = dist.spec, .computed = computed[t]};
    if (closed) r.predicted = expected[t];
    r.asserted = closed;
    finish(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CountReport> fourth_moment_suite(const CodeSpec& spec, const GaloisField& field,
                                        const RunOptions& options) {
  std::vector<CountReport> out;
  out.push_back(unit_system_histogram(spec, field));
  out.push_back(scaling_reduction_check(spec, field));
  out.push_back(residue_class_breakdown(spec, field));
  for (int c = 1; c <= 4; ++c) out.push_back(residue_case_histogram(spec, field, c));
  out.push_back(curve_system_histogram(spec, field, CurveForm::Difference, options));
  out.push_back(curve_system_histogram(spec, field, CurveForm::Sum, options));
  return out;
}

}  // namespace cwdw
