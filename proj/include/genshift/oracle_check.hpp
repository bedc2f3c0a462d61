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

// Cross-checks of the structural analysis against the dense oracle.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "genshift/dense_oracle.hpp"
#include "genshift/index_domain.hpp"

namespace genshift {

inline constexpr double kOracleNormTolerance = 1e-9;
inline constexpr std::uint64_t kMaxRandomOracleN = 256;

struct OracleDisagreement {
  std::vector<Index> images;
  std::string check;
};

struct OracleSummary {
  std::uint64_t n = 0;
  std::uint64_t maps_checked = 0;
  std::uint64_t disagreements = 0;
  // First few offending maps; `disagreements` counts all of them.
  std::vector<OracleDisagreement> offending;
};

// Empty when the finite map agrees with the oracle on: the operator norm
// (within kOracleNormTolerance), sigma injectivity and surjectivity against
// the exact rank, isometry against unitarity, and apply against the dense
// product on every basis vector. Otherwise names the first failing check.
std::string oracle_disagreement(const IndexMap& map, std::uint64_t seed);

OracleSummary oracle_check_exhaustive(std::uint64_t n, std::uint64_t seed);
OracleSummary oracle_check_random(std::uint64_t n, std::uint64_t count,
                                  std::uint64_t seed);

// Uniform random image table on Finite(n).
std::vector<Index> random_images(std::uint64_t n, std::mt19937_64& rng);

}  // namespace genshift
