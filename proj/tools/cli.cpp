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

#include "cwdw/cli.hpp"

#include <filesystem>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "cwdw/closed_forms.hpp"
#include "cwdw/code.hpp"
#include "cwdw/errors.hpp"
#include "cwdw/expsum.hpp"
#include "cwdw/field.hpp"
#include "cwdw/lemmas.hpp"
#include "cwdw/report.hpp"

namespace cwdw {
namespace {

struct Config {
  std::uint32_t p = 3;
  unsigned m = 5;
  std::uint64_t k = 1;
  std::string mode;  // empty: chosen from gcd(m, k)
  std::string method = "exact";
  std::uint64_t samples = 100'000;
  bool samples_given = false;
  std::uint64_t seed = 1;
  std::uint64_t budget = RunOptions{}.budget;
  unsigned jobs = 0;
  std::string out;
  std::string format = "json";
  std::string which = "all";
  bool ranks = false;

  RunOptions run() const { return {budget, jobs}; }
};

// A finished command: the rendered report and whether it passed.
struct Outcome {
  std::string text;
  bool passed = true;
};

std::string render(const Json& j) { return j.dump(2) + "\n"; }

CodeSpec spec_of(const Config& c) {
  ParameterRegime regime = std::gcd<std::uint64_t>(c.m, c.k) == 1 ? ParameterRegime::Coprime
                                                                  : ParameterRegime::General;
  if (c.mode == "t2") regime = ParameterRegime::Coprime;
  if (c.mode == "t3") regime = ParameterRegime::General;
  return validate_spec(c.p, c.m, c.k, regime);
}

Outcome cmd_field(const Config& c) {
  const GaloisField field = GaloisField::construct(c.p, c.m);
  if (c.format == "csv") {
    std::ostringstream s;
    s << "key,value\np," << field.p() << "\nm," << field.m() << "\nq," << field.q() << "\nmodulus,"
      << field.modulus().to_string() << "\ntables," << (field.has_tables() ? "true" : "false") << '\n';
    return {s.str()};
  }
  return {render(to_json(field))};
}

Outcome cmd_wd(const Config& c) {
  const CodeSpec spec = spec_of(c);
  const SamplingOptions sampling{c.samples, c.seed};
  if (c.method == "closed") {
    const GaloisField field = GaloisField::construct(c.p, c.m, false);
    const auto dist = weight_distribution(spec, field, WeightMethod::ClosedForm);
    return {c.format == "csv" ? to_csv(dist) : render(to_json(dist))};
  }
  require_budget(c.method == "sampled" ? BigInt(0) : BigInt(spec.q) * spec.q * spec.q, c.budget,
                 "exhaustive enumeration");
  const GaloisField field = GaloisField::construct(c.p, c.m);
  if (c.method == "verify") {
    const auto exact = weight_distribution(spec, field, WeightMethod::Exact, c.run());
    const auto closed = weight_distribution(spec, field, WeightMethod::ClosedForm);
    const bool match = exact.frequencies == closed.frequencies;
    if (c.format == "csv") {
      return {to_csv(exact) + "\n" + to_csv(closed), match};
    }
    Json j;
    j["spec"] = to_json(spec);
    j["method"] = "verify";
    j["match"] = match;
    j["exact"] = to_json(exact)["weights"];
    j["closed"] = to_json(closed)["weights"];
    return {render(j), match};
  }
  const WeightMethod method = c.method == "sampled" ? WeightMethod::Sampled : WeightMethod::Exact;
  const auto dist = weight_distribution(spec, field, method, c.run(), sampling);
  return {c.format == "csv" ? to_csv(dist) : render(to_json(dist))};
}

Outcome cmd_sdist(const Config& c) {
  const CodeSpec spec = spec_of(c);
  const GaloisField field = GaloisField::construct(c.p, c.m);
  ValueDistribution dist;
  if (c.method == "sampled") {
    dist = value_distribution_sampled(spec, field, {c.samples, c.seed}, c.run());
  } else {
    dist = value_distribution_full(spec, field, c.run(), {.with_ranks = c.ranks});
  }
  return {c.format == "csv" ? to_csv(dist) : render(to_json(dist))};
}

CountReport example_report(const ReferenceEnumerator& ref) {
  const CodeSpec spec = validate_spec(ref.p, ref.m, ref.k);
  const FrequencyTable table = table2(ref.p, ref.m);
  CountReport r{.lemma = "example-" + std::to_string(ref.p) + "-" + std::to_string(ref.m) + "-" +
                         std::to_string(ref.k),
                .spec = spec,
                .computed = 0,
                .predicted = BigInt(ref.frequencies.size())};
  bool extra = false;
  for (const auto& row : table.rows) {
    if (row.label == 0) continue;
    const auto w = static_cast<std::uint64_t>(row.label);
    const auto it = ref.frequencies.find(w);
    if (it == ref.frequencies.end()) {
      extra = true;
      continue;
    }
    r.checks.push_back({"A_" + std::to_string(w), row.frequency, it->second});
    if (row.frequency == it->second) r.computed += 1;
  }
  r.checks.push_back({"weights outside the reference enumerator", extra ? 1 : 0, BigInt(0)});
  r.match = r.computed == *r.predicted && !extra;
  return r;
}

Outcome cmd_verify(const Config& c) {
  const std::string& w = c.which;
  std::vector<CountReport> reports;
  if (w == "examples" || w == "all") {
    for (const auto& ref : reference_enumerators()) reports.push_back(example_report(ref));
  }
  if (w != "examples") {
    const CodeSpec spec = spec_of(c);
    const GaloisField field = GaloisField::construct(c.p, c.m);
    const RunOptions run = c.run();
    const bool lemmas = w == "lemmas" || w == "all";
    const bool appendix = w == "appendix" || w == "all";
    if (w == "n2" || lemmas) reports.push_back(count_n2(spec, field, run));
    if (w == "n3" || lemmas) reports.push_back(count_n3(spec, field, run));
    if (w == "n4" || lemmas) reports.push_back(count_n4(spec, field, run));
    if (appendix) {
      for (auto& r : fourth_moment_suite(spec, field, run)) reports.push_back(std::move(r));
    }
    if (w == "unit") reports.push_back(unit_system_histogram(spec, field));
    if (w == "scaling") {
      reports.push_back(scaling_reduction_check(spec, field, c.samples_given ? c.samples : 100, c.seed));
    }
    if (w == "cases") {
      reports.push_back(residue_class_breakdown(spec, field));
      for (int k = 1; k <= 4; ++k) reports.push_back(residue_case_histogram(spec, field, k));
    }
    if (w == "curves") {
      reports.push_back(curve_system_histogram(spec, field, CurveForm::Difference, run));
      reports.push_back(curve_system_histogram(spec, field, CurveForm::Sum, run));
    }
    const BigInt cube = BigInt(spec.q) * spec.q * spec.q;
    const bool exhaustive_fits = cube <= c.budget;
    if (w == "moments" || w == "rank" || (w == "all" && exhaustive_fits)) {
      const bool need_full = w != "rank" || exhaustive_fits;
      if (need_full) {
        const ValueDistribution dist = value_distribution_full(spec, field, run, {.with_ranks = true});
        if (w != "rank") {
          for (auto& r : moment_reports(dist)) reports.push_back(std::move(r));
        }
        if (w != "moments") reports.push_back(rank_sign_consistency(dist));
      } else {
        reports.push_back(rank_sign_sampled(spec, field, c.samples_given ? c.samples : 10'000, c.seed, run));
      }
    } else if (w == "all") {
      reports.push_back(rank_sign_sampled(spec, field, c.samples_given ? c.samples : 10'000, c.seed, run));
    }
  }

  bool passed = true;
  for (const auto& r : reports) passed = passed && r.passed();
  if (c.format == "csv") return {to_csv(reports), passed};
  Json j;
  j["which"] = w;
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  j["reports"] = std::move(arr);
  j["passed"] = passed;
  return {render(j), passed};
}

Outcome cmd_tables(const Config& c) {
  const CodeSpec spec = spec_of(c);
  FrequencyTable values;
  FrequencyTable weights;
  if (spec.regime == ParameterRegime::Coprime && spec.e == 1) {
    values = table1(spec.p, spec.m);
    weights = table2(spec.p, spec.m);
  } else {
    values = value_table(spec.p, spec.m, spec.e);
    weights = table3(spec.p, spec.m, spec.e);
  }
  if (c.format == "csv") return {to_csv(weights) + "\n" + to_csv(values)};
  Json j;
  j["spec"] = to_json(spec);
  j["weights"] = to_json(weights);
  j["values"] = to_json(values);
  return {render(j)};
}

void write_atomically(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw ParameterError("cannot open output file: " + path);
    f << text;
    if (!f) throw ParameterError("cannot write output file: " + path);
  }
  std::filesystem::rename(tmp, target);
}

void add_field_params(CLI::App* sub, Config& c, bool required) {
  auto* p = sub->add_option("--p", c.p, "field characteristic (odd prime)");
  auto* m = sub->add_option("--m", c.m, "extension degree");
  if (required) {
    p->required();
    m->required();
  }
}

void add_code_params(CLI::App* sub, Config& c, bool required) {
  add_field_params(sub, c, required);
  sub->add_option("--k", c.k, "exponent parameter k")->capture_default_str();
  sub->add_option("--mode", c.mode, "t2: gcd(m,k) = 1 tables, t3: general e")
      ->check(CLI::IsMember({"t2", "t3"}));
}

void add_run_params(CLI::App* sub, Config& c) {
  sub->add_option("--budget", c.budget, "maximum number of elementary operations")->capture_default_str();
  sub->add_option("--jobs", c.jobs, "worker threads (default: CWDW_JOBS or CPU count)");
}

void add_sampling_params(CLI::App* sub, Config& c) {
  sub->add_option_function<std::uint64_t>(
      "--samples",
      [&c](const std::uint64_t& v) {
        c.samples = v;
        c.samples_given = true;
      },
      "number of random samples");
  sub->add_option("--seed", c.seed, "random seed")->capture_default_str();
}

void add_output_params(CLI::App* sub, Config& c) {
  sub->add_option("--out", c.out, "write the report to this file");
  sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Weight distributions of five-weight p-ary cyclic codes"};
  app.name("cwdw");
  app.require_subcommand(1, 1);

  auto* field = app.add_subcommand("field", "describe the field GF(p^m)");
  add_field_params(field, c, true);
  add_output_params(field, c);

  auto* wd = app.add_subcommand("wd", "weight distribution");
  add_code_params(wd, c, true);
  wd->add_option("--method", c.method, "exact, closed, sampled or verify")
      ->check(CLI::IsMember({"exact", "closed", "sampled", "verify"}))
      ->capture_default_str();
  add_sampling_params(wd, c);
  add_run_params(wd, c);
  add_output_params(wd, c);

  auto* sdist = app.add_subcommand("s-dist", "distribution of exponential-sum values");
  add_code_params(sdist, c, true);
  sdist->add_option("--method", c.method, "exact or sampled")
      ->check(CLI::IsMember({"exact", "sampled"}))
      ->capture_default_str();
  sdist->add_flag("--ranks", c.ranks, "also record the quadratic-form rank profile");
  add_sampling_params(sdist, c);
  add_run_params(sdist, c);
  add_output_params(sdist, c);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_code_params(verify, c, false);
  verify->add_option("--which", c.which, "suite to run")
      ->check(CLI::IsMember({"n2", "n3", "n4", "lemmas", "unit", "scaling", "cases", "curves", "appendix",
                             "moments", "examples", "rank", "all"}))
      ->capture_default_str();
  add_sampling_params(verify, c);
  add_run_params(verify, c);
  add_output_params(verify, c);

  auto* tables = app.add_subcommand("tables", "closed-form value and weight tables");
  add_code_params(tables, c, true);
  add_output_params(tables, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Outcome result;
    if (field->parsed()) result = cmd_field(c);
    if (wd->parsed()) result = cmd_wd(c);
    if (sdist->parsed()) result = cmd_sdist(c);
    if (verify->parsed()) result = cmd_verify(c);
    if (tables->parsed()) result = cmd_tables(c);
    if (c.out.empty()) {
      out << result.text;
    } else {
      write_atomically(c.out, result.text);
    }
    if (!result.passed) {
      err << "verification failed\n";
      return kExitVerification;
    }
    return kExitOk;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InvariantViolation& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kExitVerification;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("cwdw");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace cwdw
