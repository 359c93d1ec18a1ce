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

#ifndef CWDW_LEMMAS_HPP
#define CWDW_LEMMAS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cwdw/bigint.hpp"
#include "cwdw/code.hpp"
#include "cwdw/expsum.hpp"
#include "cwdw/field.hpp"
#include "cwdw/parallel.hpp"

namespace cwdw {

// Brute-force solution counts for the systems behind the fourth power
// moment. Nothing here uses algebraic shortcuts: these counts are the
// independent ground truth the rest of the library is checked against.

struct SubCheck {
  std::string name;
  BigInt computed;
  std::optional<BigInt> predicted;
  bool asserted = true;

  bool match() const { return !predicted || computed == *predicted; }
};

struct HistogramEntry {
  std::uint64_t count = 0;  // solutions in a bucket
  BigInt multiplicity;      // number of buckets with that many solutions

  friend bool operator==(const HistogramEntry&, const HistogramEntry&) = default;
};

struct CountReport {
  std::string lemma;
  CodeSpec spec;
  BigInt computed;
  std::optional<BigInt> predicted{};
  // Informational reports never fail a verification run.
  bool asserted = true;
  std::vector<HistogramEntry> histogram{};            // sorted by count
  std::vector<HistogramEntry> predicted_histogram{};  // empty when not predicted
  std::vector<SubCheck> checks{};
  // computed == predicted, histograms agree, and every asserted check matches.
  bool match = false;

  bool passed() const { return !asserted || match; }
};

/// #{(x,y) : x+y = 0, x^d1 + y^d1 = 0, x^d2 + y^d2 = 0}, predicted q.
CountReport count_n2(const CodeSpec& spec, const GaloisField& field, const RunOptions& options = {});

/// Three-variable analogue, predicted qp + q - p.
CountReport count_n3(const CodeSpec& spec, const GaloisField& field, const RunOptions& options = {});

/// Four-variable analogue, predicted q(qp + q - p), computed as the sum of
/// squared bucket sizes over keys (x+y, x^d1+y^d1, x^d2+y^d2). Also splits
/// the sum into the a = x+y = 0 part (q^2) and the rest (q(qp - p)).
CountReport count_n4(const CodeSpec& spec, const GaloisField& field, const RunOptions& options = {});

/// Buckets x in F_q (with y = 1 - x) by (x^d1 + y^d1, x^d2 + y^d2) and
/// histograms bucket sizes over (b, c) in (F_q^*)^2.
CountReport unit_system_histogram(const CodeSpec& spec, const GaloisField& field);

/// For sampled a != 0 and (b, c), the count of the (a, b, c) system equals
/// the unit-system count at (b / a^d1, c / a^d2); for a != 0 no solution has
/// b = 0 or c = 0.
CountReport scaling_reduction_check(const CodeSpec& spec, const GaloisField& field,
                                    std::uint64_t samples = 100, std::uint64_t seed = 1);

/// Unit-system solutions split by the residue classes of (x, y), which are
/// disjoint. Hard-asserts that the classes add up to the bucket size at every
/// (b, c) and that the (1,1) bucket holds p solutions.
CountReport residue_class_breakdown(const CodeSpec& spec, const GaloisField& field);

/// The overlapping class predicates of the four square/nonsquare cases:
///   1: x square,            y nonsquare or zero
///   2: y square,            x nonsquare or zero
///   3: x, y square or zero
///   4: x, y nonsquare or zero
/// Histogram over (b, c) != (1,1); asserted only for p = 3 mod 4. The value at
/// (1,1) is reported as an unasserted check.
CountReport residue_case_histogram(const CodeSpec& spec, const GaloisField& field, int which);

enum class CurveForm {
  Difference,  // x^2 - y^2 = 1, b = x^{p^{2k}+1} - y^{p^{2k}+1}
  Sum,         // x^2 + y^2 = 1, b = x^{p^{2k}+1} + y^{p^{2k}+1}
};

/// Brute force over (x, y) in F_q^2; histogram of per-b solution counts over
/// b in F_q, plus the total number of points on the conic. Asserted only for
/// p = 3 mod 4.
CountReport curve_system_histogram(const CodeSpec& spec, const GaloisField& field, CurveForm form,
                                   const RunOptions& options = {});

/// Rank/sign consistency over a rank profile: s = 0 exactly when the rank is
/// odd, |s| = p^{m - rank/2} otherwise, and every rank lies in [m - 4e, m]
/// (the range is asserted only for e = 1). Requires a distribution computed
/// with ranks.
CountReport rank_sign_consistency(const ValueDistribution& dist);

/// The same checks on seeded random nonzero Delta, each evaluated by a direct
/// count over F_q and an independent rank computation.
CountReport rank_sign_sampled(const CodeSpec& spec, const GaloisField& field, std::uint64_t samples,
                              std::uint64_t seed, const RunOptions& options = {});

/// The four power moments of a full distribution against their closed forms
/// (asserted for e = 1 only).
std::vector<CountReport> moment_reports(const ValueDistribution& dist);

/// unit system, scaling, class breakdown, cases 1-4, both curve forms.
std::vector<CountReport> fourth_moment_suite(const CodeSpec& spec, const GaloisField& field,
                                        const RunOptions& options = {});

}  // namespace cwdw

#endif  // CWDW_LEMMAS_HPP
