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

#include "genshift/natural_domain.hpp"

#include <algorithm>
#include <cmath>

#include "genshift/errors.hpp"

namespace genshift {

bool in_domain(const IndexMap& map, const SparseVector& z) {
  if (!(map.domain() == z.domain())) {
    throw DomainError("in_domain: map on " + map.domain().describe() +
                      ", vector on " + z.domain().describe());
  }
  return std::all_of(z.entries().begin(), z.entries().end(), [&](const Entry& e) {
    return map.fiber_card(e.index).is_finite();
  });
}

bool MSet::contains(Index i) const {
  if (std::binary_search(excluded.begin(), excluded.end(), i)) return false;
  if (exact) return true;
  return std::binary_search(members.begin(), members.end(), i);
}

MSet m_set(const IndexMap& map, std::uint64_t window) {
  const FiberReport report = fiber_report(map, window);
  MSet m;
  m.window = report.window;
  m.members = report.m_set;
  const auto& declared = map.facts().infinite_fibers;
  if (map.is_finite()) {
    m.exact = true;
  } else if (declared) {
    m.exact = true;
    m.excluded = *declared;
    std::sort(m.excluded.begin(), m.excluded.end());
  } else {
    for (const auto& [index, card] : report.cardinalities) {
      if (card.is_infinite()) m.excluded.push_back(index);
    }
  }
  return m;
}

std::vector<RecordFiber> record_fibers(const IndexMap& map, std::uint64_t count,
                                       std::uint64_t scan_cap) {
  std::vector<RecordFiber> records;
  records.reserve(count);
  const std::uint64_t limit =
      map.is_finite() ? std::min<std::uint64_t>(map.domain().size(), scan_cap) : scan_cap;
  std::uint64_t best = 0;
  for (Index a = 1; a <= limit && records.size() < count; ++a) {
    const FiberCard c = map.fiber_card(a);
    if (c.is_infinite() || c.value() <= best) continue;
    // The first record may be any nonempty fiber.
    best = c.value();
    records.push_back({a, best});
  }
  if (records.size() < count) {
    throw SearchExhaustedError("found " + std::to_string(records.size()) +
                               " record fiber sizes below index " +
                               std::to_string(limit) + ", needed " +
                               std::to_string(count));
  }
  return records;
}

ClosedReport domain_closed(const IndexMap& map, std::uint64_t window) {
  ClosedReport out;
  // Validates the rule's declared facts on the window.
  const FiberReport report = fiber_report(map, window);
  const RuleFacts& facts = map.facts();

  std::uint64_t window_sup = 0;
  for (const auto& [index, card] : report.cardinalities) {
    if (card.is_finite()) window_sup = std::max(window_sup, card.value());
  }

  if (map.is_finite()) {
    out.closed = Truth::kTrue;
    out.bound_on_m = Certified{window_sup};
  } else if (facts.finite_fiber_bound) {
    out.closed = Truth::kTrue;
    out.bound_on_m = Certified{*facts.finite_fiber_bound};
  } else if (facts.unbounded_over_finite_fibers) {
    out.closed = Truth::kFalse;
    out.bound_on_m = CertifiedUnbounded{};
    // Records up to the window; the rule guarantees they continue forever.
    std::uint64_t best = 0;
    for (const auto& [index, card] : report.cardinalities) {
      if (card.is_finite() && card.value() > best) {
        best = card.value();
        out.witness.push_back({index, best});
      }
    }
  } else {
    out.closed = Truth::kUnknown;
    out.bound_on_m = WindowOnly{window_sup, report.window};
  }
  return out;
}

DomainReport analyze_domain(const IndexMap& map, std::uint64_t window) {
  DomainReport r;
  r.m = m_set(map, window);
  r.closed = domain_closed(map, window);
  r.characterization_holds = r.closed.closed;
  r.continuous_on_domain = r.closed.closed;
  return r;
}

DivergenceWitness divergence_witness(const IndexMap& map, std::uint64_t K,
                                     std::uint64_t scan_cap) {
  if (K == 0) throw UnsupportedError("divergence_witness: K must be >= 1");
  const ClosedReport closed = domain_closed(map, kDefaultWindow);
  if (closed.closed == Truth::kTrue) {
    throw UnsupportedError(
        "divergence_witness: fibers over M are bounded, so sigma_phi maps every "
        "vector supported on M into l2");
  }

  DivergenceWitness w{SparseVector(map.domain()), {}, 0.0, 0.0, false};
  w.records = record_fibers(map, K, scan_cap);

  std::vector<Entry> entries;
  entries.reserve(K);
  w.dominates_harmonic = true;
  // Neumaier-compensated sum of n_k / k^2.
  double sum = 0.0;
  double carry = 0.0;
  for (std::uint64_t k = 1; k <= K; ++k) {
    const RecordFiber& rec = w.records[k - 1];
    const double kd = static_cast<double>(k);
    entries.push_back({rec.index, Scalar{1.0 / kd}});
    const double term = static_cast<double>(rec.size) / (kd * kd);
    const double t = sum + term;
    carry += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
    w.dominates_harmonic = w.dominates_harmonic && rec.size >= k;
  }
  w.image_norm_sq_lower_bound = sum + carry;
  w.vector = SparseVector::from_entries(map.domain(), std::move(entries));
  w.vector_norm_sq = norm_sq(w.vector);
  return w;
}

}  // namespace genshift
