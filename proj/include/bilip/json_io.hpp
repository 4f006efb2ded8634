// Copyright 2026 The bilip Authors
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


#ifndef BILIP_JSON_IO_HPP_
#define BILIP_JSON_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bilip/avoider.hpp"
#include "bilip/certificate.hpp"
#include "bilip/embedder.hpp"
#include "bilip/gluer.hpp"
#include "bilip/interval_set.hpp"
#include "bilip/pl_map.hpp"
#include "bilip/sequences.hpp"
#include "bilip/uniform.hpp"
#include "json.hpp"

// JSON encodings. Every rational is a "p/q" string; objects use sorted
// keys, so equal values always serialize to identical bytes. Malformed
// input throws Error(kParseError).
namespace bilip::io {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

Json ToJson(const Rational& x);
Rational RationalFrom(const Json& j);
Json ToJson(const BigInt& x);
BigInt BigIntFrom(const Json& j);

// {"components": [["p/q", "r/s"], ...]}
Json ToJson(const IntervalSet& s);
IntervalSet IntervalSetFrom(const Json& j);
// Same format, written component by component.
void WriteIntervalSet(std::ostream& os, const IntervalSet& s);

Json ToJson(const SequenceSpec& s);
SequenceSpec SequenceSpecFrom(const Json& j);
// "geometric:r:f", "harmonic", "interleaved-mersenne", "tower",
// "explicit:p/q,p/q,..." or a JSON object.
SequenceSpec ParseSequence(std::string_view text);

Json ToJson(const Certificates& c);
Json ToJson(const PiecewiseLinearMap& m);
PiecewiseLinearMap MapFrom(const Json& j);

Json ToJson(const EmbeddingResult& r, const IntervalSet& e);
// Without the set; see WriteReport for large sets.
Json ToJson(const AvoidanceSet& a);
std::vector<AvoidanceRow> AvoidanceRowsFrom(const Json& j);
Json ToJson(const RefutationCertificate& c);
Json ToJson(const StressReport& r);
Json ToJson(const MSequence& m);
Json ToJson(const UniformEmbeddingResult& r);
Json ToJson(const GluedMap& g);

// {"schema_version", "command", "params", "result", "certificates"}.
Json Report(std::string command, Json params, Json result,
            const Certificates& checks);

// Dumps `report` (indented) and, when `streamed` is given, writes it as
// report.result.set without building the component array in memory.
void WriteReport(std::ostream& os, Json report,
                 const IntervalSet* streamed = nullptr);

Json ReadJsonFile(const std::string& path);

}  // namespace bilip::io

#endif  // BILIP_JSON_IO_HPP_
