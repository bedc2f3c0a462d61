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

#include "genshift/oracle_check.hpp"

#include <cmath>

#include "genshift/errors.hpp"
#include "genshift/shift_operator.hpp"

namespace genshift {

namespace {

constexpr std::size_t kMaxReported = 16;

bool matches(const Verdict& v, bool expected) {
  return expected ? v.is_true() : v.is_false();
}

void record(OracleSummary& summary, const IndexMap& map, std::string check) {
  ++summary.disagreements;
  if (summary.offending.size() < kMaxReported) {
    summary.offending.push_back(
        {std::vector<Index>(map.images().begin(), map.images().end()), std::move(check)});
  }
}

}  // namespace

std::string oracle_disagreement(const IndexMap& map, std::uint64_t seed) {
  const DenseOperator dense = to_dense(map);
  const ClassificationReport report = classify(map);
  const StructuralCheck structure = structural_check(dense);

  SpectralNormOptions options;
  options.seed = seed;
  const double oracle_norm = spectral_norm(dense, options);
  if (report.operator_norm.kind != OperatorNorm::Kind::kExact ||
      std::abs(report.operator_norm.value - oracle_norm) > kOracleNormTolerance) {
    return "operator norm " + std::to_string(report.operator_norm.value) +
           " vs oracle " + std::to_string(oracle_norm);
  }
  if (!matches(report.sigma_injective, structure.injective)) return "sigma injective";
  if (!matches(report.sigma_surjective, structure.surjective)) return "sigma surjective";
  if (!matches(report.isometry, structure.unitary)) return "isometry vs unitary";
  if (!report.compact.is_true()) return "compact";

  const std::size_t n = dense.size();
  for (Index theta = 1; theta <= n; ++theta) {
    std::vector<Scalar> basis(n);
    basis[theta - 1] = 1.0;
    const std::vector<Scalar> expected = dense.multiply(std::span<const Scalar>(basis));
    const SparseVector got =
        apply_in_l2(map, SparseVector::unit(map.domain(), theta));
    for (Index b = 1; b <= n; ++b) {
      if (got.at(b) != expected[b - 1]) {
        return "apply(e_" + std::to_string(theta) + ") at " + std::to_string(b);
      }
    }
  }
  return {};
}

OracleSummary oracle_check_exhaustive(std::uint64_t n, std::uint64_t seed) {
  OracleSummary summary;
  summary.n = n;
  for (const std::vector<Index>& images : ExhaustiveMaps(n)) {
    const IndexMap map = IndexMap::finite(images);
    ++summary.maps_checked;
    if (std::string why = oracle_disagreement(map, seed); !why.empty()) {
      record(summary, map, std::move(why));
    }
  }
  return summary;
}

std::vector<Index> random_images(std::uint64_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Index> pick(1, n);
  std::vector<Index> images(n);
  for (Index& img : images) img = pick(rng);
  return images;
}

OracleSummary oracle_check_random(std::uint64_t n, std::uint64_t count,
                                  std::uint64_t seed) {
  if (n < 2) throw ConstructionError("oracle_check: n must be >= 2");
  if (n > kMaxRandomOracleN) {
    throw UnsupportedError("oracle_check: n = " + std::to_string(n) +
                           " exceeds the dense cap of " +
                           std::to_string(kMaxRandomOracleN));
  }
  OracleSummary summary;
  summary.n = n;
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < count; ++i) {
    const IndexMap map = IndexMap::finite(random_images(n, rng));
    ++summary.maps_checked;
    if (std::string why = oracle_disagreement(map, seed); !why.empty()) {
      record(summary, map, std::move(why));
    }
  }
  return summary;
}

}  // namespace genshift
