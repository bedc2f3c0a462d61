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

// sigma_phi is compact exactly when the index set is finite. On the countable
// set a bounded phi yields half unit vectors e_a/2 in the open unit ball whose
// images stay at least sqrt(2)/2 apart, so no subsequence converges.

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "genshift/index_domain.hpp"
#include "genshift/sparse_vector.hpp"

namespace genshift {

bool is_compact(const IndexMap& map);

struct WitnessSequence {
  // Increasing indices with nonempty, pairwise disjoint finite fibers.
  std::vector<Index> indices;
  std::vector<std::uint64_t> fiber_sizes;
  // e_{indices[i]} / 2, each of norm 1/2.
  std::vector<SparseVector> vectors;
  // Exact min over i != j of ||sigma(v_i) - sigma(v_j)||^2 = (c_i + c_j) / 4.
  boost::rational<std::int64_t> min_separation_sq;
  // Largest index scanned to find the sequence.
  std::uint64_t window_used = 0;

  double min_separation() const;
  // min_separation_sq >= 1/2, i.e. every pair is at least sqrt(2)/2 apart.
  bool separated() const;
};

inline constexpr std::uint64_t kDefaultWitnessWindowCap = std::uint64_t{1} << 24;

// Smallest-first search for `count` indices with nonempty fibers, doubling the
// window up to window_cap. Throws UnsupportedError on finite domains, when
// count < 2, or when the fibers are not bounded; SearchExhaustedError when the
// cap is reached first.
WitnessSequence witness_sequence(const IndexMap& map, std::uint64_t count,
                                 std::uint64_t window,
                                 std::uint64_t window_cap = kDefaultWitnessWindowCap);

}  // namespace genshift
