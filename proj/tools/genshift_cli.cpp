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

// genshift: command-line front end over the libgenshift C API.
//
//   genshift analyze <map.json> [--window W]
//   genshift apply <map.json> <vector.json>
//   genshift witness <map.json> --kind compact|divergence [--count N] [--K K]
//   genshift oracle-check --n N (--exhaustive | --random R)
//
// Exit codes: 0 ok, 2 parse, 3 integrity, 4 not in l2, 5 witness
// precondition, 6 oracle disagreement, 1 anything else.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "genshift/genshift.h"

namespace {

constexpr std::uint64_t kFallbackSeed = 42;

struct MapDeleter {
  void operator()(gs_map* m) const { gs_map_free(m); }
};
struct VectorDeleter {
  void operator()(gs_vector* v) const { gs_vector_free(v); }
};
struct StringDeleter {
  void operator()(char* s) const { gs_string_free(s); }
};
using MapPtr = std::unique_ptr<gs_map, MapDeleter>;
using VectorPtr = std::unique_ptr<gs_vector, VectorDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int exit_code(gs_status status) {
  switch (status) {
    case GS_OK:
      return 0;
    case GS_ERR_PARSE:
    case GS_ERR_DOMAIN:
    case GS_ERR_CONSTRUCTION:
    case GS_ERR_INVALID_ARGUMENT:
      return 2;
    case GS_ERR_INTEGRITY:
      return 3;
    case GS_NOT_IN_L2:
      return 4;
    case GS_ERR_PRECONDITION:
    case GS_ERR_SEARCH_EXHAUSTED:
      return 5;
    case GS_ERR_ORACLE_DISAGREEMENT:
      return 6;
    case GS_ERR_NUMERIC:
    case GS_ERR_INTERNAL:
      break;
  }
  return 1;
}

class CommandError {
 public:
  CommandError(gs_status status, std::string message)
      : status_(status), message_(std::move(message)) {}
  gs_status status() const { return status_; }
  const std::string& message() const { return message_; }

 private:
  gs_status status_;
  std::string message_;
};

void check(gs_status status, const std::string& context) {
  if (status != GS_OK) {
    throw CommandError(status, context + ": " + gs_status_name(status) + ": " +
                                   gs_last_error());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError(GS_ERR_PARSE, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MapPtr load_map(const std::string& path) {
  gs_map* raw = nullptr;
  check(gs_map_from_json(read_file(path).c_str(), &raw), path);
  return MapPtr(raw);
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("GENSHIFT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CommandError(GS_ERR_PARSE, std::string("GENSHIFT_SEED is not a number: ") + env);
    }
  }
  return kFallbackSeed;
}

void print_owned(char* text) {
  StringPtr owned(text);
  std::cout << owned.get() << '\n';
}

int run_analyze(const std::string& map_path, std::uint64_t window, std::uint64_t seed) {
  MapPtr map = load_map(map_path);
  char* out = nullptr;
  check(gs_analyze_json(map.get(), window, seed, &out), "analyze");
  print_owned(out);
  return 0;
}

int run_apply(const std::string& map_path, const std::string& vector_path) {
  MapPtr map = load_map(map_path);
  gs_vector* raw = nullptr;
  check(gs_vector_from_json(map.get(), read_file(vector_path).c_str(), &raw), vector_path);
  VectorPtr x(raw);

  gs_vector* image = nullptr;
  std::uint64_t offending = 0;
  const gs_status status = gs_apply(map.get(), x.get(), &image, &offending);
  if (status == GS_NOT_IN_L2) {
    std::cout << "{\"not_in_l2\": {\"index\": " << offending << "}}\n";
    std::cerr << "genshift: " << gs_last_error() << '\n';
    return exit_code(status);
  }
  check(status, "apply");
  VectorPtr y(image);
  char* out = nullptr;
  check(gs_vector_to_json(y.get(), &out), "apply");
  print_owned(out);
  return 0;
}

int run_witness(const std::string& map_path, const std::string& kind,
                std::uint64_t count, std::uint64_t k, std::uint64_t window) {
  MapPtr map = load_map(map_path);
  char* out = nullptr;
  if (kind == "compact") {
    check(gs_compact_witness_json(map.get(), count, window, &out), "witness");
  } else {
    check(gs_divergence_witness_json(map.get(), k, &out), "witness");
  }
  print_owned(out);
  return 0;
}

int run_oracle_check(std::uint64_t n, std::uint64_t random_count, std::uint64_t seed) {
  char* out = nullptr;
  const gs_status status = gs_oracle_check_json(n, random_count, seed, &out);
  if (out) print_owned(out);
  if (status == GS_ERR_ORACLE_DISAGREEMENT) {
    std::cerr << "genshift: " << gs_last_error() << '\n';
    return exit_code(status);
  }
  check(status, "oracle-check");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized shift operators on l2: analysis, application, "
               "witnesses and oracle cross-checks"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> seed_flag;
  app.add_option("--seed", seed_flag,
                 "Seed for every randomized procedure (default: $GENSHIFT_SEED, else 42)");

  std::string map_path;
  std::uint64_t window = 64;

  auto* analyze = app.add_subcommand("analyze", "Fiber report, classification and domain report");
  analyze->add_option("map", map_path, "Map JSON file")->required();
  analyze->add_option("--window", window, "Index window for countable domains")
      ->check(CLI::PositiveNumber);

  std::string vector_path;
  auto* apply = app.add_subcommand("apply", "Apply sigma_phi to a vector");
  apply->add_option("map", map_path, "Map JSON file")->required();
  apply->add_option("vector", vector_path, "Vector JSON file")->required();

  std::string kind;
  std::uint64_t count = 3;
  std::uint64_t k = 16;
  auto* witness = app.add_subcommand("witness", "Non-compactness or divergence witness");
  witness->add_option("map", map_path, "Map JSON file")->required();
  witness->add_option("--kind", kind, "compact or divergence")
      ->required()
      ->check(CLI::IsMember({"compact", "divergence"}));
  witness->add_option("--count", count, "Number of witness vectors (compact)");
  witness->add_option("--K", k, "Truncation length (divergence)");
  witness->add_option("--window", window, "Initial search window (compact)")
      ->check(CLI::PositiveNumber);

  std::uint64_t n = 0;
  std::uint64_t random_count = 0;
  bool exhaustive = false;
  auto* oracle = app.add_subcommand("oracle-check", "Cross-check against the dense oracle");
  oracle->add_option("--n", n, "Index set size")->required();
  auto* ex = oracle->add_flag("--exhaustive", exhaustive, "All n^n maps");
  auto* rnd = oracle->add_option("--random", random_count, "Number of random maps")
                  ->check(CLI::PositiveNumber);
  ex->excludes(rnd);
  rnd->excludes(ex);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const std::uint64_t seed = resolve_seed(seed_flag);
    if (*analyze) return run_analyze(map_path, window, seed);
    if (*apply) return run_apply(map_path, vector_path);
    if (*witness) return run_witness(map_path, kind, count, k, window);
    if (*oracle) {
      if (!exhaustive && random_count == 0) {
        std::cerr << "genshift: oracle-check needs --exhaustive or --random R\n";
        return 2;
      }
      return run_oracle_check(n, exhaustive ? 0 : random_count, seed);
    }
  } catch (const CommandError& e) {
    std::cerr << "genshift: " << e.message() << '\n';
    return exit_code(e.status());
  }
  return 1;
}
