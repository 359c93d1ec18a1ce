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

#include "cwdw/report.hpp"

#include <limits>
#include <sstream>

namespace cwdw {
namespace {

Json big_or_number(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) {
    return static_cast<std::uint64_t>(v);
  }
  return to_decimal(v);
}

Json histogram_json(const std::vector<HistogramEntry>& h) {
  Json out = Json::array();
  for (const auto& e : h) out.push_back({{"count", e.count}, {"multiplicity", to_decimal(e.multiplicity)}});
  return out;
}

std::string label_header(TableKind kind) {
  switch (kind) {
    case TableKind::ValueDistribution:
    case TableKind::GeneralValues:
      return "s";
    case TableKind::WeightDistribution:
    case TableKind::GeneralWeights:
      return "weight";
  }
  return "label";
}

}  // namespace

Json to_json(const CodeSpec& spec) {
  Json j;
  j["p"] = spec.p;
  j["m"] = spec.m;
  j["k"] = spec.k;
  j["q"] = spec.q;
  j["d1"] = big_or_number(spec.d1);
  j["d2"] = big_or_number(spec.d2);
  j["e"] = spec.e;
  return j;
}

Json to_json(const GaloisField& field) {
  Json j;
  j["p"] = field.p();
  j["m"] = field.m();
  j["q"] = field.q();
  j["modulus"] = field.modulus().to_string();
  j["pi"] = field.element_to_string(field.pi());
  j["tables"] = field.has_tables();
  return j;
}

Json to_json(const WeightDistribution& dist) {
  Json j;
  j["spec"] = to_json(dist.spec);
  j["method"] = to_string(dist.method);
  Json weights = Json::array();
  for (const auto& [w, f] : dist.frequencies) weights.push_back({{"w", w}, {"freq", to_decimal(f)}});
  j["weights"] = std::move(weights);
  j["total"] = to_decimal(dist.total());
  j["seed"] = dist.seed ? Json(*dist.seed) : Json(nullptr);
  j["samples"] = dist.samples ? Json(*dist.samples) : Json(nullptr);
  return j;
}

Json to_json(const ValueDistribution& dist) {
  Json j;
  j["spec"] = to_json(dist.spec);
  j["method"] = dist.method;
  Json values = Json::array();
  for (const auto& [s, f] : dist.frequencies) values.push_back({{"s", s}, {"freq", to_decimal(f)}});
  j["values"] = std::move(values);
  j["total"] = to_decimal(dist.total());
  const auto moments = power_moments(dist);
  Json mj = Json::array();
  for (const auto& v : moments) mj.push_back(to_decimal(v));
  j["moments"] = std::move(mj);
  if (!dist.rank_profile.empty()) {
    Json ranks = Json::array();
    for (const auto& [key, f] : dist.rank_profile) {
      ranks.push_back({{"rank", key.first}, {"s", key.second}, {"freq", to_decimal(f)}});
    }
    j["ranks"] = std::move(ranks);
  }
  j["seed"] = dist.seed ? Json(*dist.seed) : Json(nullptr);
  j["samples"] = dist.samples ? Json(*dist.samples) : Json(nullptr);
  return j;
}

Json to_json(const CountReport& report) {
  Json j;
  j["lemma"] = report.lemma;
  j["spec"] = to_json(report.spec);
  j["computed"] = to_decimal(report.computed);
  j["predicted"] = report.predicted ? Json(to_decimal(*report.predicted)) : Json(nullptr);
  j["match"] = report.match;
  j["asserted"] = report.asserted;
  if (!report.histogram.empty()) j["histogram"] = histogram_json(report.histogram);
  if (!report.predicted_histogram.empty()) {
    j["predicted_histogram"] = histogram_json(report.predicted_histogram);
  }
  if (!report.checks.empty()) {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"name", c.name},
                        {"computed", to_decimal(c.computed)},
                        {"predicted", c.predicted ? Json(to_decimal(*c.predicted)) : Json(nullptr)},
                        {"match", c.match()},
                        {"asserted", c.asserted}});
    }
    j["checks"] = std::move(checks);
  }
  return j;
}

Json to_json(const FrequencyTable& table) {
  Json j;
  j["table"] = to_string(table.kind);
  j["p"] = table.p;
  j["m"] = table.m;
  j["e"] = table.e;
  const std::string label = label_header(table.kind);
  Json rows = Json::array();
  for (const auto& r : table.rows) {
    // s-values can be negative; they are emitted as strings like every big value.
    Json value = label == "s" ? Json(to_decimal(r.label)) : big_or_number(r.label);
    rows.push_back({{label, std::move(value)}, {"freq", to_decimal(r.frequency)}});
  }
  j["rows"] = std::move(rows);
  j["total"] = to_decimal(table.total());
  if (label == "weight") j["enumerator"] = weight_enumerator_string(table);
  return j;
}

std::string to_csv(const WeightDistribution& dist) {
  std::ostringstream out;
  out << "weight,frequency\n";
  for (const auto& [w, f] : dist.frequencies) out << w << ',' << f << '\n';
  return out.str();
}

std::string to_csv(const ValueDistribution& dist) {
  std::ostringstream out;
  out << "s,frequency\n";
  for (const auto& [s, f] : dist.frequencies) out << s << ',' << f << '\n';
  return out.str();
}

std::string to_csv(const FrequencyTable& table) {
  std::ostringstream out;
  out << label_header(table.kind) << ",frequency\n";
  for (const auto& r : table.rows) out << r.label << ',' << r.frequency << '\n';
  return out.str();
}

std::string to_csv(const std::vector<CountReport>& reports) {
  std::ostringstream out;
  out << "lemma,computed,predicted,match\n";
  for (const auto& r : reports) {
    out << r.lemma << ',' << r.computed << ',';
    if (r.predicted) out << *r.predicted;
    out << ',' << (r.match ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace cwdw
