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

#include "genshift/json_io.hpp"

#include <cmath>
#include <string>

#include "genshift/dense_oracle.hpp"
#include "genshift/errors.hpp"

namespace genshift {

namespace {

Index parse_index(const Json& v, const std::string& what) {
  if (!v.is_number_integer()) throw ParseError(what + " must be an integer");
  if (v.is_number_unsigned()) return v.get<Index>();
  const auto s = v.get<std::int64_t>();
  if (s < 0) throw ParseError(what + " must be non-negative, got " + std::to_string(s));
  return static_cast<Index>(s);
}

double parse_real(const Json& v, const std::string& what) {
  if (!v.is_number()) throw ParseError(what + " must be a number");
  return v.get<double>();
}

}  // namespace

IndexMap map_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("map document must be a JSON object");
  const auto kind = doc.find("kind");
  if (kind == doc.end() || !kind->is_string()) {
    throw ParseError("map document needs a string field \"kind\"");
  }
  if (*kind == "finite") {
    const auto images = doc.find("images");
    if (images == doc.end() || !images->is_array()) {
      throw ParseError("finite map needs an array field \"images\"");
    }
    std::vector<Index> table;
    table.reserve(images->size());
    for (std::size_t i = 0; i < images->size(); ++i) {
      table.push_back(parse_index((*images)[i], "images[" + std::to_string(i) + "]"));
    }
    return IndexMap::finite(std::move(table));
  }
  if (*kind == "symbolic") {
    const auto name = doc.find("name");
    if (name == doc.end() || !name->is_string()) {
      throw ParseError("symbolic map needs a string field \"name\"");
    }
    std::optional<std::uint64_t> param;
    if (auto p = doc.find("param"); p != doc.end()) param = parse_index(*p, "param");
    return rules::by_name(name->get<std::string>(), param);
  }
  throw ParseError("unknown map kind \"" + kind->get<std::string>() + "\"");
}

IndexMap map_from_json_text(std::string_view text) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("map file is not valid JSON");
  return map_from_json(doc);
}

Json map_to_json(const IndexMap& map) {
  if (const SymbolicRule* rule = map.rule()) {
    Json j{{"kind", "symbolic"}, {"name", rule->name()}};
    if (rule->param() != 0) j["param"] = rule->param();
    return j;
  }
  Json images = Json::array();
  for (Index img : map.images()) images.push_back(img);
  return Json{{"kind", "finite"}, {"images", std::move(images)}};
}

SparseVector vector_from_json(const Json& doc, const IndexSet& domain) {
  if (!doc.is_array()) throw ParseError("vector document must be a JSON array");
  std::vector<Entry> entries;
  entries.reserve(doc.size());
  for (std::size_t k = 0; k < doc.size(); ++k) {
    const Json& e = doc[k];
    const std::string where = "entry " + std::to_string(k);
    if (!e.is_object() || !e.contains("i") || !e.contains("re")) {
      throw ParseError(where + " needs fields \"i\" and \"re\"");
    }
    const double re = parse_real(e["re"], where + ".re");
    const double im = e.contains("im") ? parse_real(e["im"], where + ".im") : 0.0;
    entries.push_back({parse_index(e["i"], where + ".i"), Scalar{re, im}});
  }
  return SparseVector::from_entries(domain, std::move(entries));
}

SparseVector vector_from_json_text(std::string_view text, const IndexSet& domain) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("vector file is not valid JSON");
  return vector_from_json(doc, domain);
}

Json vector_to_json(const SparseVector& v) {
  Json out = Json::array();
  for (const Entry& e : v.entries()) {
    out.push_back({{"i", e.index}, {"re", e.value.real()}, {"im", e.value.imag()}});
  }
  return out;
}

Json to_json(const FiberCard& c) {
  if (c.is_infinite()) return "infinite";
  return c.value();
}

Json to_json(const BoundVerdict& v) {
  if (const auto* c = std::get_if<Certified>(&v)) {
    return {{"kind", "certified"}, {"bound", c->bound}};
  }
  if (std::holds_alternative<CertifiedUnbounded>(v)) {
    return {{"kind", "certified_unbounded"}};
  }
  const auto& w = std::get<WindowOnly>(v);
  return {{"kind", "window_only"}, {"window_sup", w.window_sup}, {"window", w.window}};
}

Json to_json(Truth t) {
  switch (t) {
    case Truth::kTrue:
      return true;
    case Truth::kFalse:
      return false;
    case Truth::kUnknown:
      break;
  }
  return "window_only";
}

Json to_json(const Verdict& v) {
  if (v.truth == Truth::kUnknown) return {{"window_only", v.explanation}};
  return v.is_true();
}

Json to_json(const OperatorNorm& n) {
  switch (n.kind) {
    case OperatorNorm::Kind::kExact:
      return n.value;
    case OperatorNorm::Kind::kInfinite:
      return "infinite";
    case OperatorNorm::Kind::kWindowLowerBound:
      break;
  }
  return {{"window_lower_bound", n.value}, {"window", n.window}};
}

Json to_json(const FiberReport& r) {
  Json cards = Json::array();
  for (const auto& [index, card] : r.cardinalities) {
    cards.push_back({{"i", index}, {"card", to_json(card)}});
  }
  return {{"cardinalities", std::move(cards)},
          {"sup", to_json(r.sup)},
          {"verdict", to_json(r.verdict)},
          {"m_set", r.m_set},
          {"window", r.window}};
}

Json to_json(const ClassificationReport& r) {
  return {{"maps_into_l2", to_json(r.maps_into_l2)},
          {"operator_norm", to_json(r.operator_norm)},
          {"sigma_injective", to_json(r.sigma_injective)},
          {"sigma_surjective", to_json(r.sigma_surjective)},
          {"isometry", to_json(r.isometry)},
          {"compact", to_json(r.compact)}};
}

Json to_json(const MSet& m) {
  return {{"exact", m.exact},
          {"members", m.members},
          {"excluded", m.excluded},
          {"window", m.window}};
}

Json to_json(const DomainReport& r) {
  Json witness = Json::array();
  for (const RecordFiber& rec : r.closed.witness) {
    witness.push_back({{"i", rec.index}, {"fiber_size", rec.size}});
  }
  return {{"m_set", to_json(r.m)},
          {"closed", to_json(r.closed.closed)},
          {"bound_on_m", to_json(r.closed.bound_on_m)},
          {"witness", std::move(witness)},
          {"characterization_holds", to_json(r.characterization_holds)},
          {"continuous_on_domain", to_json(r.continuous_on_domain)}};
}

Json to_json(const WitnessSequence& w) {
  Json vectors = Json::array();
  for (const SparseVector& v : w.vectors) vectors.push_back(vector_to_json(v));
  return {{"kind", "compact"},
          {"indices", w.indices},
          {"fiber_sizes", w.fiber_sizes},
          {"vectors", std::move(vectors)},
          {"min_separation_sq",
           {{"num", w.min_separation_sq.numerator()},
            {"den", w.min_separation_sq.denominator()}}},
          {"min_separation", w.min_separation()},
          {"separated", w.separated()},
          {"window_used", w.window_used}};
}

Json to_json(const DivergenceWitness& w) {
  Json records = Json::array();
  for (const RecordFiber& rec : w.records) {
    records.push_back({{"i", rec.index}, {"fiber_size", rec.size}});
  }
  return {{"kind", "divergence"},
          {"K", w.records.size()},
          {"records", std::move(records)},
          {"vector", vector_to_json(w.vector)},
          {"vector_norm_sq", w.vector_norm_sq},
          {"image_norm_sq_lower_bound", w.image_norm_sq_lower_bound},
          {"dominates_harmonic", w.dominates_harmonic}};
}

Json to_json(const OracleSummary& s) {
  Json offending = Json::array();
  for (const OracleDisagreement& d : s.offending) {
    offending.push_back({{"images", d.images}, {"check", d.check}});
  }
  return {{"n", s.n},
          {"maps_checked", s.maps_checked},
          {"disagreements", s.disagreements},
          {"offending", std::move(offending)}};
}

Json analysis_document(const IndexMap& map, std::uint64_t window, std::uint64_t seed) {
  Json doc{{"schema_version", kSchemaVersion},
           {"map", map_to_json(map)},
           {"domain", map.domain().describe()},
           {"fiber_report", to_json(fiber_report(map, window))},
           {"classification", to_json(classify(map, window, window))},
           {"domain_report", to_json(analyze_domain(map, window))}};
  if (map.is_finite()) {
    const DenseOperator dense = to_dense(map);
    const StructuralCheck s = structural_check(dense);
    SpectralNormOptions options;
    options.seed = seed;
    doc["oracle"] = {{"seed", seed},
                     {"spectral_norm", spectral_norm(dense, options)},
                     {"rank", s.rank},
                     {"injective", s.injective},
                     {"surjective", s.surjective},
                     {"unitary", s.unitary}};
  }
  return doc;
}

std::string dump(const Json& doc) { return doc.dump(2); }

}  // namespace genshift
