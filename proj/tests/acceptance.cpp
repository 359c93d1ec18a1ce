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

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include "cwdw/cli.hpp"
#include "cwdw/closed_forms.hpp"
#include "cwdw/expsum.hpp"
#include "cwdw/lemmas.hpp"
#include "cwdw/report.hpp"

using namespace cwdw;

namespace {

// Failure details are collected here and printed after the verdict line.
struct Criterion {
  std::vector<std::string> problems;

  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string str(const BigInt& v) { return to_decimal(v); }

// Shared state: the exhaustive (3,5,1) run feeds criteria 1, 2, 4 and 10.
struct Shared {
  CodeSpec spec = validate_spec(3, 5, 1);
  GaloisField field = GaloisField::construct(3, 5);
  std::optional<ValueDistribution> ranked;
  std::string wd_jobs1;
};

void criterion1(Shared& sh, Criterion& c) {
  const CliRun r = cli({"wd", "--p", "3", "--m", "5", "--k", "1", "--method", "exact", "--jobs", "1"});
  c.require(r.code == kExitOk, "wd exited with " + std::to_string(r.code) + ": " + r.err);
  if (r.code != kExitOk) return;
  sh.wd_jobs1 = r.out;
  const Json j = Json::parse(r.out);
  const std::map<std::uint64_t, std::string> expected = {
      {0, "1"}, {108, "14520"}, {144, "2548260"}, {162, "9740258"}, {180, "2038608"}, {216, "7260"}};
  std::map<std::uint64_t, std::string> got;
  for (const auto& w : j["weights"]) got[w["w"].get<std::uint64_t>()] = w["freq"].get<std::string>();
  c.require(got == expected, "weight distribution differs from the reference enumerator");
  c.require(j["total"] == "14348907", "total is not 3^15");
}

void criterion2(Shared& sh, Criterion& c) {
  sh.ranked = value_distribution_full(sh.spec, sh.field, {.budget = 100'000'000, .jobs = 0},
                                      {.with_ranks = true});
  const FrequencyTable t = table1(3, 5);
  std::map<std::int64_t, BigInt> expected;
  for (const auto& row : t.rows) expected[static_cast<std::int64_t>(row.label)] = row.frequency;
  c.require(sh.ranked->frequencies == expected, "value distribution differs from the value table");
  const auto got = power_moments(*sh.ranked);
  const auto want = expected_moments(3, 5);
  for (int i = 0; i < 4; ++i) {
    c.require(got[i] == want[i], "moment " + std::to_string(i + 1) + ": " + str(got[i]) + " != " + str(want[i]));
  }
}

void criterion3(Shared&, Criterion& c) {
  for (const auto& ref : reference_enumerators()) {
    std::map<std::uint64_t, BigInt> got;
    for (const auto& row : table2(ref.p, ref.m).rows) {
      if (row.label != 0) got[static_cast<std::uint64_t>(row.label)] = row.frequency;
    }
    c.require(got == ref.frequencies, "weight table differs for p=" + std::to_string(ref.p) +
                                          " m=" + std::to_string(ref.m));
  }
  for (auto [p, m] : {std::pair{3u, 5u}, {3u, 7u}, {5u, 5u}}) {
    const auto a = table3(p, m, 1);
    const auto b = table2(p, m);
    bool same = a.rows.size() == b.rows.size();
    for (std::size_t i = 0; same && i < a.rows.size(); ++i) {
      same = a.rows[i].label == b.rows[i].label && a.rows[i].frequency == b.rows[i].frequency;
    }
    c.require(same, "general table at e = 1 differs for p=" + std::to_string(p) + " m=" + std::to_string(m));
  }
  const auto t = table3(3, 10, 2);
  BigInt nonzero = 0;
  for (const auto& row : t.rows) {
    c.require(row.frequency >= 0, "negative frequency in the (3,10,2) table");
    if (row.label != 0) nonzero += row.frequency;
  }
  c.require(nonzero == big_pow(3, 30) - 1, "(3,10,2) nonzero frequencies sum to " + str(nonzero));
}

void criterion4(Shared& sh, Criterion& c) {
  if (!sh.ranked) sh.ranked = value_distribution_full(sh.spec, sh.field, {}, {.with_ranks = true});
  const CountReport r = rank_sign_consistency(*sh.ranked);
  c.require(r.match, "rank/sign mismatch: " + str(r.computed) + " of " + str(*r.predicted) + " consistent");
  for (const auto& [key, count] : sh.ranked->rank_profile) {
    const auto [rank, s] = key;
    if (rank == 0) {
      c.require(s == 243 && count == 1, "rank 0 appears for a nonzero Delta");
      continue;
    }
    c.require(rank >= 1 && rank <= 5, "rank " + std::to_string(rank) + " out of range");
  }
}

void criterion5(Shared&, Criterion& c) {
  for (auto [p, m, k] : {std::tuple{3u, 5u, 1u}, std::tuple{3u, 5u, 2u}, std::tuple{5u, 5u, 1u}}) {
    const CodeSpec spec = validate_spec(p, m, k);
    const GaloisField f = GaloisField::construct(p, m);
    for (const CountReport& r : {count_n2(spec, f), count_n3(spec, f), count_n4(spec, f)}) {
      c.require(r.match, r.lemma + " at (" + std::to_string(p) + "," + std::to_string(m) + "," +
                             std::to_string(k) + "): " + str(r.computed) + " vs " + str(*r.predicted));
    }
  }
}

std::map<std::uint64_t, BigInt> as_map(const std::vector<HistogramEntry>& h) {
  std::map<std::uint64_t, BigInt> out;
  for (const auto& e : h) out[e.count] = e.multiplicity;
  return out;
}

void criterion6(Shared&, Criterion& c) {
  struct Want {
    std::uint32_t p;
    std::uint64_t plus_size, plus_times, minus_size, minus_times;
  };
  for (const Want w : {Want{3, 4, 30, 2, 60}, Want{5, 6, 260, 4, 390}}) {
    const CodeSpec spec = validate_spec(w.p, 5, 1);
    const GaloisField f = GaloisField::construct(w.p, 5);
    const CountReport r = unit_system_histogram(spec, f);
    const auto h = as_map(r.histogram);
    const BigInt pairs = BigInt(spec.q - 1) * (spec.q - 1);
    const std::string at = "(" + std::to_string(w.p) + ",5,1)";
    c.require(r.computed == w.p, at + " N(1,1) = " + str(r.computed));
    c.require(h.size() == 4, at + " unexpected bucket sizes");
    c.require(h.count(w.p) && h.at(w.p) == 1, at + " size-p bucket count");
    c.require(h.count(w.plus_size) && h.at(w.plus_size) == w.plus_times, at + " p+1 buckets");
    c.require(h.count(w.minus_size) && h.at(w.minus_size) == w.minus_times, at + " p-1 buckets");
    c.require(h.count(0) && h.at(0) == pairs - 1 - w.plus_times - w.minus_times, at + " empty buckets");
    c.require(r.match, at + " report does not match its prediction");
  }
}

void criterion7(Shared& sh, Criterion& c) {
  const CountReport d = curve_system_histogram(sh.spec, sh.field, CurveForm::Difference);
  const CountReport s = curve_system_histogram(sh.spec, sh.field, CurveForm::Sum);
  c.require(d.computed == 242, "difference form total " + str(d.computed));
  c.require(s.computed == 244, "sum form total " + str(s.computed));
  c.require(as_map(d.histogram) == std::map<std::uint64_t, BigInt>{{0, 182}, {4, 60}},
            "difference form histogram");
  c.require(as_map(s.histogram) == std::map<std::uint64_t, BigInt>{{0, 212}, {8, 30}}, "sum form histogram");
  c.require(d.checks.at(0).computed == 2, "difference form count at b = 1");
  c.require(s.checks.at(0).computed == 4, "sum form count at b = 1");
}

void criterion8(Shared& sh, Criterion& c) {
  const CountReport classes = residue_class_breakdown(sh.spec, sh.field);
  c.require(classes.match, "disjoint classes do not reconcile with the unit system");
  c.require(classes.computed == 3, "(1,1) total is " + str(classes.computed));
  for (int k = 1; k <= 4; ++k) {
    const CountReport r = residue_case_histogram(sh.spec, sh.field, k);
    c.require(r.asserted && r.match, "case " + std::to_string(k) + " histogram away from (1,1)");
  }
}

// Weights and s-values from sampling lie in the closed-form supports, and
// each weight frequency is within 5 standard deviations of its expectation.
void sampled_check(std::uint32_t p, unsigned m, std::uint64_t k, Criterion& c) {
  const std::string at = "(" + std::to_string(p) + "," + std::to_string(m) + "," + std::to_string(k) + ")";
  const bool general = std::gcd<std::uint64_t>(m, k) != 1;
  const CodeSpec spec = validate_spec(p, m, k, general ? ParameterRegime::General : ParameterRegime::Coprime);
  const GaloisField f = GaloisField::construct(p, m);
  const std::uint64_t n = 100'000;
  const ValueDistribution dist = value_distribution_sampled(spec, f, {n, 2024});
  const FrequencyTable weights = general ? table3(p, m, spec.e) : table2(p, m);
  const FrequencyTable values = value_table(p, m, spec.e);
  std::set<BigInt> value_support;
  for (const auto& row : values.rows) value_support.insert(row.label);
  for (const auto& [s, freq] : dist.frequencies) {
    c.require(value_support.count(BigInt(s)) == 1, at + " s = " + std::to_string(s) + " outside the support");
  }
  const auto sampled_weights = weights_from_values(dist);
  const BigInt total = weights.total();
  for (const auto& [w, freq] : sampled_weights) {
    c.require(weights.frequency(w) > 0, at + " weight " + std::to_string(w) + " outside the support");
  }
  for (const auto& row : weights.rows) {
    // Proportions in double precision are ample for a 5-sigma window.
    const double pi = static_cast<double>(BigRational(row.frequency, total));
    const auto it = sampled_weights.find(static_cast<std::uint64_t>(row.label));
    const double observed = it == sampled_weights.end() ? 0.0 : static_cast<double>(it->second);
    const double mean = n * pi;
    const double sd = std::sqrt(n * pi * (1 - pi));
    c.require(std::abs(observed - mean) <= 5 * sd + 1e-9,
              at + " weight " + str(row.label) + ": observed " + std::to_string(observed) + ", expected " +
                  std::to_string(mean));
  }
}

void criterion9(Shared&, Criterion& c) {
  sampled_check(3, 7, 2, c);
  sampled_check(5, 5, 1, c);
  sampled_check(3, 10, 2, c);
}

void criterion10(Shared& sh, Criterion& c) {
  if (sh.wd_jobs1.empty()) {
    const CliRun r = cli({"wd", "--p", "3", "--m", "5", "--k", "1", "--method", "exact", "--jobs", "1"});
    sh.wd_jobs1 = r.out;
  }
  const CliRun r = cli({"wd", "--p", "3", "--m", "5", "--k", "1", "--method", "exact", "--jobs", "8"});
  c.require(r.code == kExitOk, "jobs=8 run failed: " + r.err);
  c.require(!sh.wd_jobs1.empty() && r.out == sh.wd_jobs1, "JSON differs between --jobs 1 and --jobs 8");
}

}  // namespace

int main() {
  Shared shared;
  const std::vector<std::pair<std::string, std::function<void(Shared&, Criterion&)>>> criteria = {
      {"exhaustive weight distribution at (3,5,1) equals the reference enumerator", criterion1},
      {"value distribution and power moments at (3,5,1) equal the closed forms", criterion2},
      {"closed-form weight tables reproduce the reference enumerators", criterion3},
      {"rank/sign rule and rank range hold for every Delta at (3,5,1)", criterion4},
      {"N2, N3, N4 brute-force counts at (3,5,1), (3,5,2), (5,5,1)", criterion5},
      {"unit-system bucket distribution at (3,5,1) and (5,5,1)", criterion6},
      {"curve-system histograms at (3,5,1)", criterion7},
      {"residue-class reconciliation and case histograms at (3,5,1)", criterion8},
      {"sampled weights and values at (3,7,2), (5,5,1), (3,10,2)", criterion9},
      {"exhaustive JSON is identical for --jobs 1 and --jobs 8", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(shared, c);
    } catch (const std::exception& e) {
      c.problems.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = c.problems.empty();
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " ("
              << std::fixed << std::setprecision(1) << secs << " s)\n";
    for (const auto& p : c.problems) std::cout << "    " << p << '\n';
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
