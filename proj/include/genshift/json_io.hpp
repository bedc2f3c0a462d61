// Copyright 2026 The genshift Authors
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

#pragma once

// JSON file formats and report serialization.
//
//   map:    {"kind":"finite","images":[2,3,1]}
//           {"kind":"symbolic","name":"block","param":3}
//   vector: [{"i":1,"re":1.0,"im":0.0}, ...]

#include <cstdint>
#include <string_view>

#include "json.hpp"

#include "genshift/compactness.hpp"
#include "genshift/index_domain.hpp"
#include "genshift/natural_domain.hpp"
#include "genshift/oracle_check.hpp"
#include "genshift/shift_operator.hpp"
#include "genshift/sparse_vector.hpp"

namespace genshift {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Throw ParseError on malformed documents; invalid tables surface as
// ConstructionError and out-of-domain vector indices as DomainError.
IndexMap map_from_json(const Json& doc);
IndexMap map_from_json_text(std::string_view text);
Json map_to_json(const IndexMap& map);

SparseVector vector_from_json(const Json& doc, const IndexSet& domain);
SparseVector vector_from_json_text(std::string_view text, const IndexSet& domain);
Json vector_to_json(const SparseVector& v);

Json to_json(const FiberCard& c);
Json to_json(const BoundVerdict& v);
Json to_json(const Verdict& v);
Json to_json(Truth t);
Json to_json(const OperatorNorm& n);
Json to_json(const FiberReport& r);
Json to_json(const ClassificationReport& r);
Json to_json(const MSet& m);
Json to_json(const DomainReport& r);
Json to_json(const WitnessSequence& w);
Json to_json(const DivergenceWitness& w);
Json to_json(const OracleSummary& s);

// Fiber report, classification and domain report in one document. Finite
// maps also carry the dense-oracle view computed with `seed`.
Json analysis_document(const IndexMap& map, std::uint64_t window, std::uint64_t seed);

// Serialized with shortest round-trip number formatting, so the text is
// deterministic and re-parses to identical doubles.
std::string dump(const Json& doc);

}  // namespace genshift
