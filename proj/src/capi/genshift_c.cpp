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

#include "genshift/genshift.h"

#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <string>

#include "genshift/compactness.hpp"
#include "genshift/errors.hpp"
#include "genshift/json_io.hpp"
#include "genshift/natural_domain.hpp"
#include "genshift/oracle_check.hpp"
#include "genshift/shift_operator.hpp"

struct gs_map {
  genshift::IndexMap map;
};

struct gs_vector {
  genshift::SparseVector vec;
};

namespace {

thread_local std::string g_last_error;

gs_status fail(gs_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
gs_status guarded(F&& body) {
  g_last_error.clear();
  try {
    return body();
  } catch (const genshift::ParseError& e) {
    return fail(GS_ERR_PARSE, e.what());
  } catch (const genshift::IntegrityError& e) {
    return fail(GS_ERR_INTEGRITY, e.what());
  } catch (const genshift::UnsupportedError& e) {
    return fail(GS_ERR_PRECONDITION, e.what());
  } catch (const genshift::DomainError& e) {
    return fail(GS_ERR_DOMAIN, e.what());
  } catch (const genshift::ConstructionError& e) {
    return fail(GS_ERR_CONSTRUCTION, e.what());
  } catch (const genshift::NumericError& e) {
    return fail(GS_ERR_NUMERIC, e.what());
  } catch (const genshift::SearchExhaustedError& e) {
    return fail(GS_ERR_SEARCH_EXHAUSTED, e.what());
  } catch (const std::bad_alloc&) {
    return fail(GS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GS_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gs_verdict to_c(const genshift::Verdict& v) {
  switch (v.truth) {
    case genshift::Truth::kTrue:
      return GS_VERDICT_TRUE;
    case genshift::Truth::kFalse:
      return GS_VERDICT_FALSE;
    case genshift::Truth::kUnknown:
      break;
  }
  return GS_VERDICT_WINDOW_ONLY;
}

gs_norm_kind to_c(genshift::OperatorNorm::Kind k) {
  switch (k) {
    case genshift::OperatorNorm::Kind::kExact:
      return GS_NORM_EXACT;
    case genshift::OperatorNorm::Kind::kInfinite:
      return GS_NORM_INFINITE;
    case genshift::OperatorNorm::Kind::kWindowLowerBound:
      break;
  }
  return GS_NORM_WINDOW_LOWER_BOUND;
}

#define GS_REQUIRE(cond, what)                              \
  do {                                                      \
    if (!(cond)) return fail(GS_ERR_INVALID_ARGUMENT, what); \
  } while (0)

}  // namespace

extern "C" {

const char* gs_version(void) { return "1.0.0"; }

const char* gs_status_name(gs_status status) {
  switch (status) {
    case GS_OK: return "ok";
    case GS_ERR_PARSE: return "parse error";
    case GS_ERR_INTEGRITY: return "integrity error";
    case GS_NOT_IN_L2: return "not in l2";
    case GS_ERR_PRECONDITION: return "precondition failed";
    case GS_ERR_ORACLE_DISAGREEMENT: return "oracle disagreement";
    case GS_ERR_DOMAIN: return "domain error";
    case GS_ERR_CONSTRUCTION: return "construction error";
    case GS_ERR_NUMERIC: return "numeric error";
    case GS_ERR_SEARCH_EXHAUSTED: return "search exhausted";
    case GS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GS_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* gs_last_error(void) { return g_last_error.c_str(); }

void gs_string_free(char* s) { std::free(s); }

gs_status gs_map_from_json(const char* text, gs_map** out) {
  GS_REQUIRE(text && out, "null argument");
  return guarded([&] {
    *out = new gs_map{genshift::map_from_json_text(text)};
    return GS_OK;
  });
}

gs_status gs_map_from_images(const uint64_t* images, size_t n, gs_map** out) {
  GS_REQUIRE(out && (images || n == 0), "null argument");
  return guarded([&] {
    *out = new gs_map{genshift::IndexMap::finite(std::vector<genshift::Index>(images, images + n))};
    return GS_OK;
  });
}

gs_status gs_map_from_rule(const char* name, uint64_t param, gs_map** out) {
  GS_REQUIRE(name && out, "null argument");
  return guarded([&] {
    std::optional<std::uint64_t> p;
    if (param != 0) p = param;
    *out = new gs_map{genshift::rules::by_name(name, p)};
    return GS_OK;
  });
}

void gs_map_free(gs_map* map) { delete map; }

int gs_map_is_finite(const gs_map* map, uint64_t* size) {
  if (!map) return 0;
  const bool finite = map->map.is_finite();
  if (size) *size = finite ? map->map.domain().size() : 0;
  return finite ? 1 : 0;
}

gs_status gs_map_eval(const gs_map* map, uint64_t k, uint64_t* out) {
  GS_REQUIRE(map && out, "null argument");
  return guarded([&] {
    *out = map->map.eval(k);
    return GS_OK;
  });
}

gs_status gs_map_fiber_card(const gs_map* map, uint64_t a, uint64_t* card,
                            int* is_infinite) {
  GS_REQUIRE(map && card && is_infinite, "null argument");
  return guarded([&] {
    const genshift::FiberCard c = map->map.fiber_card(a);
    *is_infinite = c.is_infinite() ? 1 : 0;
    *card = c.is_infinite() ? 0 : c.value();
    return GS_OK;
  });
}

gs_status gs_map_to_json(const gs_map* map, char** out) {
  GS_REQUIRE(map && out, "null argument");
  return guarded([&] {
    *out = copy_string(genshift::map_to_json(map->map).dump());
    return GS_OK;
  });
}

gs_status gs_vector_from_json(const gs_map* domain_of, const char* text,
                              gs_vector** out) {
  GS_REQUIRE(domain_of && text && out, "null argument");
  return guarded([&] {
    *out = new gs_vector{genshift::vector_from_json_text(text, domain_of->map.domain())};
    return GS_OK;
  });
}

gs_status gs_vector_unit(const gs_map* domain_of, uint64_t theta, gs_vector** out) {
  GS_REQUIRE(domain_of && out, "null argument");
  return guarded([&] {
    *out = new gs_vector{genshift::SparseVector::unit(domain_of->map.domain(), theta)};
    return GS_OK;
  });
}

void gs_vector_free(gs_vector* v) { delete v; }

gs_status gs_vector_to_json(const gs_vector* v, char** out) {
  GS_REQUIRE(v && out, "null argument");
  return guarded([&] {
    *out = copy_string(genshift::dump(genshift::vector_to_json(v->vec)));
    return GS_OK;
  });
}

gs_status gs_vector_norm(const gs_vector* v, double* out) {
  GS_REQUIRE(v && out, "null argument");
  *out = genshift::norm(v->vec);
  return GS_OK;
}

size_t gs_vector_support_size(const gs_vector* v) {
  return v ? v->vec.support_size() : 0;
}

gs_status gs_apply(const gs_map* map, const gs_vector* x, gs_vector** out,
                   uint64_t* offending) {
  GS_REQUIRE(map && x && out, "null argument");
  return guarded([&] {
    genshift::ApplyResult r = genshift::apply(map->map, x->vec);
    if (const auto* bad = std::get_if<genshift::NotInL2>(&r)) {
      if (offending) *offending = bad->theta;
      return fail(GS_NOT_IN_L2, "sigma_phi(x) is not in l2: fiber of " +
                                    std::to_string(bad->theta) + " is infinite");
    }
    *out = new gs_vector{std::get<genshift::SparseVector>(std::move(r))};
    return GS_OK;
  });
}

gs_status gs_apply_norm_sq(const gs_map* map, const gs_vector* x, double* out) {
  GS_REQUIRE(map && x && out, "null argument");
  return guarded([&] {
    *out = genshift::apply_norm_sq(map->map, x->vec);
    return GS_OK;
  });
}

gs_status gs_classify(const gs_map* map, uint64_t injectivity_window,
                      uint64_t surjectivity_window, gs_classification* out) {
  GS_REQUIRE(map && out, "null argument");
  return guarded([&] {
    const genshift::ClassificationReport r =
        genshift::classify(map->map, injectivity_window, surjectivity_window);
    out->maps_into_l2 = to_c(r.maps_into_l2);
    out->norm_kind = to_c(r.operator_norm.kind);
    out->operator_norm = r.operator_norm.value;
    out->sigma_injective = to_c(r.sigma_injective);
    out->sigma_surjective = to_c(r.sigma_surjective);
    out->isometry = to_c(r.isometry);
    out->compact = to_c(r.compact);
    return GS_OK;
  });
}

gs_status gs_solve(const gs_map* map, const gs_vector* y, int allow_window_only,
                   gs_vector** out) {
  GS_REQUIRE(map && y && out, "null argument");
  return guarded([&] {
    genshift::SolveOptions options;
    options.allow_window_only = allow_window_only != 0;
    *out = new gs_vector{genshift::solve(map->map, y->vec, options)};
    return GS_OK;
  });
}

gs_status gs_in_domain(const gs_map* map, const gs_vector* z, int* out) {
  GS_REQUIRE(map && z && out, "null argument");
  return guarded([&] {
    *out = genshift::in_domain(map->map, z->vec) ? 1 : 0;
    return GS_OK;
  });
}

int gs_is_compact(const gs_map* map) {
  return map && genshift::is_compact(map->map) ? 1 : 0;
}

gs_status gs_analyze_json(const gs_map* map, uint64_t window, uint64_t seed,
                          char** out) {
  GS_REQUIRE(map && out, "null argument");
  GS_REQUIRE(window >= 1, "window must be >= 1");
  return guarded([&] {
    *out = copy_string(genshift::dump(genshift::analysis_document(map->map, window, seed)));
    return GS_OK;
  });
}

gs_status gs_compact_witness_json(const gs_map* map, uint64_t count, uint64_t window,
                                  char** out) {
  GS_REQUIRE(map && out, "null argument");
  return guarded([&] {
    const genshift::WitnessSequence w = genshift::witness_sequence(map->map, count, window);
    *out = copy_string(genshift::dump(genshift::to_json(w)));
    return GS_OK;
  });
}

gs_status gs_divergence_witness_json(const gs_map* map, uint64_t k, char** out) {
  GS_REQUIRE(map && out, "null argument");
  return guarded([&] {
    const genshift::DivergenceWitness w = genshift::divergence_witness(map->map, k);
    *out = copy_string(genshift::dump(genshift::to_json(w)));
    return GS_OK;
  });
}

gs_status gs_oracle_check_json(uint64_t n, uint64_t random_count, uint64_t seed,
                               char** out) {
  GS_REQUIRE(out, "null argument");
  return guarded([&] {
    const genshift::OracleSummary s =
        random_count == 0 ? genshift::oracle_check_exhaustive(n, seed)
                          : genshift::oracle_check_random(n, random_count, seed);
    genshift::Json doc = genshift::to_json(s);
    doc["mode"] = random_count == 0 ? "exhaustive" : "random";
    doc["seed"] = seed;
    *out = copy_string(genshift::dump(doc));
    if (s.disagreements != 0) {
      return fail(GS_ERR_ORACLE_DISAGREEMENT,
                  std::to_string(s.disagreements) + " maps disagree with the oracle");
    }
    return GS_OK;
  });
}

}  // extern "C"
