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

#include "genshift/compactness.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>
#include <variant>

#include "genshift/errors.hpp"

namespace genshift {

bool is_compact(const IndexMap& map) { return map.is_finite(); }

double WitnessSequence::min_separation() const {
  return std::sqrt(boost::rational_cast<double>(min_separation_sq));
}

bool WitnessSequence::separated() const {
  return min_separation_sq >= boost::rational<std::int64_t>(1, 2);
}

WitnessSequence witness_sequence(const IndexMap& map, std::uint64_t count,
                                 std::uint64_t window, std::uint64_t window_cap) {
  if (map.is_finite()) {
    throw UnsupportedError("witness_sequence: " + map.domain().describe() +
                           " is finite, so sigma_phi is compact");
  }
  if (count < 2) throw UnsupportedError("witness_sequence: need at least 2 vectors");
  if (window == 0) throw UnsupportedError("witness_sequence: window must be >= 1");

  const FiberReport report = fiber_report(map, std::min(window, window_cap));
  if (std::holds_alternative<CertifiedUnbounded>(report.verdict)) {
    throw UnsupportedError("witness_sequence: fibers of " + map.describe() +
                           " are unbounded, so sigma_phi is not an operator on l2");
  }

  WitnessSequence w;
  std::unordered_set<Index> covered;
  std::uint64_t limit = std::min(window, window_cap);
  Index next = 1;
  while (w.indices.size() < count) {
    for (; next <= limit && w.indices.size() < count; ++next) {
      const Fiber f = map.fiber(next);
      if (f.card.is_infinite()) {
        throw UnsupportedError("witness_sequence: fiber of " + std::to_string(next) +
                               " is infinite");
      }
      if (f.members.empty()) continue;
      for (Index b : f.members) {
        if (!covered.insert(b).second) {
          throw IntegrityError("fibers overlap at " + std::to_string(b));
        }
      }
      w.indices.push_back(next);
      w.fiber_sizes.push_back(f.card.value());
    }
    w.window_used = next - 1;
    if (w.indices.size() == count) break;
    if (limit >= window_cap) {
      throw SearchExhaustedError("witness_sequence: only " +
                                 std::to_string(w.indices.size()) +
                                 " nonempty fibers below " + std::to_string(window_cap));
    }
    limit = std::min(window_cap, limit * 2);
  }

  for (Index a : w.indices) {
    w.vectors.push_back(scale(Scalar{0.5}, SparseVector::unit(map.domain(), a)));
  }
  // Disjoint fibers: the image difference has c_i entries 1/2 and c_j entries
  // -1/2, so its squared norm is (c_i + c_j) / 4. The minimum pairs the two
  // smallest fibers.
  std::vector<std::uint64_t> sizes = w.fiber_sizes;
  std::partial_sort(sizes.begin(), sizes.begin() + 2, sizes.end());
  w.min_separation_sq = boost::rational<std::int64_t>(
      static_cast<std::int64_t>(sizes[0] + sizes[1]), 4);
  return w;
}

}  // namespace genshift
