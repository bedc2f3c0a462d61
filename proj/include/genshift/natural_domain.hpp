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

// The natural domain D = {z in l2 : sigma_phi(z) in l2}, the set M of indices
// with finite fiber, and the closedness criterion for D.
//
// D is always a subspace. It is closed exactly when the fiber cardinalities
// over M are uniformly bounded by some n, and then D = l2(M) with
// ||sigma_phi(z)|| <= sqrt(n) ||z|| on D.

#include <cstdint>
#include <string>
#include <vector>

#include "genshift/index_domain.hpp"
#include "genshift/shift_operator.hpp"
#include "genshift/sparse_vector.hpp"

namespace genshift {

// For finitely supported z: every support index has a finite fiber.
bool in_domain(const IndexMap& map, const SparseVector& z);

struct MSet {
  // True when `excluded` is the complete list of indices outside M (always
  // on finite domains, and for rules that declare their infinite fibers).
  bool exact = false;
  // Members of M among the scanned indices.
  std::vector<Index> members;
  // Indices outside M: the exact list when `exact`, else those in the window.
  std::vector<Index> excluded;
  std::uint64_t window = 0;  // 0 for finite domains

  bool contains(Index i) const;
};

MSet m_set(const IndexMap& map, std::uint64_t window = kDefaultWindow);

struct RecordFiber {
  Index index;
  std::uint64_t size;
};

struct ClosedReport {
  Truth closed = Truth::kUnknown;
  // Certified{n}: fibers over M bounded by n. CertifiedUnbounded: not bounded.
  // WindowOnly: the largest finite fiber seen on the window.
  BoundVerdict bound_on_m;
  // Indices of M with strictly increasing fiber sizes, smallest index first
  // for each new record. Filled when closed is kFalse.
  std::vector<RecordFiber> witness;
};

ClosedReport domain_closed(const IndexMap& map, std::uint64_t window = kDefaultWindow);

struct DomainReport {
  MSet m;
  ClosedReport closed;
  // D = {x in l2 : x vanishes off M}; equals the closedness verdict.
  Truth characterization_holds = Truth::kUnknown;
  // Continuity of sigma_phi restricted to D; equals the closedness verdict.
  Truth continuous_on_domain = Truth::kUnknown;
};

DomainReport analyze_domain(const IndexMap& map, std::uint64_t window = kDefaultWindow);

// Greedy scan for the first `count` record fiber sizes over M: an index is
// taken when its finite fiber is strictly larger than every earlier pick.
// Throws SearchExhaustedError when fewer records exist below scan_cap.
std::vector<RecordFiber> record_fibers(const IndexMap& map, std::uint64_t count,
                                       std::uint64_t scan_cap);

inline constexpr std::uint64_t kDefaultScanCap = std::uint64_t{1} << 26;

struct DivergenceWitness {
  // x_{a_k} = 1/k on the record indices a_1 < a_2 < ... < a_K.
  SparseVector vector;
  std::vector<RecordFiber> records;
  double vector_norm_sq = 0.0;
  // sum_k n_k / k^2 with compensated summation; equals the image norm^2.
  double image_norm_sq_lower_bound = 0.0;
  // n_k >= k for every k, checked in integers; this gives lower bound >= H_K.
  bool dominates_harmonic = false;
};

// Truncation of the square-summable vector whose image escapes l2 when the
// fibers over M are unbounded. Throws UnsupportedError when D is certified
// closed (fibers bounded over M) or K == 0.
DivergenceWitness divergence_witness(const IndexMap& map, std::uint64_t K,
                                     std::uint64_t scan_cap = kDefaultScanCap);

}  // namespace genshift
