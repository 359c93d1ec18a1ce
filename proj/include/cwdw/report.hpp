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

#ifndef CWDW_REPORT_HPP
#define CWDW_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "cwdw/closed_forms.hpp"
#include "cwdw/code.hpp"
#include "cwdw/expsum.hpp"
#include "cwdw/field.hpp"
#include "cwdw/lemmas.hpp"

namespace cwdw {

// JSON and CSV renderings of library results. Big integers are emitted as
// decimal strings so that no consumer loses precision; small structural
// integers (p, m, weights) are plain numbers. Key order is fixed, so equal
// results always serialize to identical bytes.

using Json = nlohmann::ordered_json;

Json to_json(const CodeSpec& spec);
Json to_json(const GaloisField& field);
Json to_json(const WeightDistribution& dist);
/// Includes the four power moments and, when present, the rank profile.
Json to_json(const ValueDistribution& dist);
Json to_json(const CountReport& report);
Json to_json(const FrequencyTable& table);

std::string to_csv(const WeightDistribution& dist);
std::string to_csv(const ValueDistribution& dist);
std::string to_csv(const FrequencyTable& table);
std::string to_csv(const std::vector<CountReport>& reports);

}  // namespace cwdw

#endif  // CWDW_REPORT_HPP
