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

#include "genshift/shift_operator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "genshift/errors.hpp"

namespace genshift {

namespace {

void require_shared_domain(const IndexMap& map, const SparseVector& x) {
  if (!(map.domain() == x.domain())) {
    throw DomainError("map on " + map.domain().describe() + " applied to a vector on " +
                      x.domain().describe());
  }
}

std::uint64_t scan_limit(const IndexMap& map, std::uint64_t window) {
  return map.is_finite() ? map.domain().size() : window;
}

std::string pair_text(std::pair<Index, Index> p) {
  return std::to_string(p.first) + " and " + std::to_string(p.second);
}

}  // namespace

ApplyResult apply(const IndexMap& map, const SparseVector& x) {
  require_shared_domain(map, x);
  // Entries are sorted, so the first hit is the smallest offending index.
  for (const Entry& e : x.entries()) {
    if (map.fiber_card(e.index).is_infinite()) return NotInL2{e.index};
  }
  std::vector<Entry> out;
  for (const Entry& e : x.entries()) {
    for (Index b : map.fiber(e.index).members) out.push_back({b, e.value});
  }
  return SparseVector::from_entries(map.domain(), std::move(out));
}

SparseVector apply_in_l2(const IndexMap& map, const SparseVector& x) {
  ApplyResult r = apply(map, x);
  if (auto* bad = std::get_if<NotInL2>(&r)) {
    throw DomainError("image is not in l2: fiber of " + std::to_string(bad->theta) +
                      " is infinite");
  }
  return std::get<SparseVector>(std::move(r));
}

double apply_norm_sq(const IndexMap& map, const SparseVector& x) {
  require_shared_domain(map, x);
  double sum = 0.0;
  for (const Entry& e : x.entries()) {
    const double w = map.fiber_card(e.index).weight(std::norm(e.value));
    if (std::isinf(w)) return std::numeric_limits<double>::infinity();
    sum += w;
  }
  return sum;
}

OperatorNorm operator_norm(const IndexMap& map, std::uint64_t window) {
  const FiberReport report = fiber_report(map, window);
  if (const auto* c = std::get_if<Certified>(&report.verdict)) {
    return {OperatorNorm::Kind::kExact, std::sqrt(static_cast<double>(c->bound)), 0};
  }
  if (std::holds_alternative<CertifiedUnbounded>(report.verdict)) {
    return {OperatorNorm::Kind::kInfinite, std::numeric_limits<double>::infinity(), 0};
  }
  const auto& w = std::get<WindowOnly>(report.verdict);
  return {OperatorNorm::Kind::kWindowLowerBound,
          std::sqrt(static_cast<double>(w.window_sup)), w.window};
}

std::optional<std::pair<Index, Index>> find_collision(const IndexMap& map,
                                                      std::uint64_t window) {
  std::unordered_map<Index, Index> first_preimage;
  const std::uint64_t limit = scan_limit(map, window);
  for (Index b = 1; b <= limit; ++b) {
    auto [it, inserted] = first_preimage.emplace(map.eval(b), b);
    if (!inserted) return std::pair{it->second, b};
  }
  return std::nullopt;
}

Verdict phi_injective(const IndexMap& map, std::uint64_t window) {
  const Truth declared = map.facts().injective;
  if (declared == Truth::kTrue) return Verdict::yes();
  if (auto pair = find_collision(map, window)) {
    return Verdict::no("phi maps " + pair_text(*pair) + " to the same index");
  }
  if (declared == Truth::kFalse) return Verdict::no("declared by rule");
  return Verdict::window_only("no collision among indices 1.." + std::to_string(window));
}

Verdict phi_surjective(const IndexMap& map, std::uint64_t window) {
  const Truth declared = map.facts().surjective;
  if (declared == Truth::kTrue) return Verdict::yes();
  const std::uint64_t limit = scan_limit(map, window);
  for (Index a = 1; a <= limit; ++a) {
    if (map.fiber_card(a) == FiberCard::finite(0)) {
      return Verdict::no(std::to_string(a) + " is not in the range of phi");
    }
  }
  if (declared == Truth::kFalse) return Verdict::no("declared by rule");
  return Verdict::window_only("every index in 1.." + std::to_string(window) +
                              " has a preimage");
}

ClassificationReport classify(const IndexMap& map, std::uint64_t injectivity_window,
                              std::uint64_t surjectivity_window) {
  if (!map.is_finite() && (injectivity_window == 0 || surjectivity_window == 0)) {
    throw UnsupportedError("classify: windows must be >= 1");
  }
  ClassificationReport report;
  report.operator_norm =
      operator_norm(map, std::max(injectivity_window, surjectivity_window));
  switch (report.operator_norm.kind) {
    case OperatorNorm::Kind::kExact:
      report.maps_into_l2 = Verdict::yes();
      break;
    case OperatorNorm::Kind::kInfinite:
      report.maps_into_l2 = Verdict::no("fiber cardinalities are unbounded");
      break;
    case OperatorNorm::Kind::kWindowLowerBound:
      report.maps_into_l2 = Verdict::window_only(
          "fibers bounded by " +
          std::to_string(static_cast<std::uint64_t>(
              std::llround(report.operator_norm.value * report.operator_norm.value))) +
          " on the window only");
      break;
  }

  // sigma onto l2 <=> phi one-to-one; sigma one-to-one <=> phi onto.
  report.sigma_surjective = phi_injective(map, injectivity_window);
  report.sigma_injective = phi_surjective(map, surjectivity_window);

  const Verdict& inj = report.sigma_injective;
  const Verdict& sur = report.sigma_surjective;
  if (inj.is_true() && sur.is_true()) {
    report.isometry = Verdict::yes();
  } else if (inj.is_false() || sur.is_false()) {
    report.isometry = Verdict::no("phi is not bijective");
  } else {
    report.isometry = Verdict::window_only("bijectivity of phi is window-limited");
  }

  report.compact = map.is_finite() ? Verdict::yes()
                                   : Verdict::no("infinite index set");
  return report;
}

SparseVector solve(const IndexMap& map, const SparseVector& y,
                   const SolveOptions& options) {
  require_shared_domain(map, y);
  const Verdict injective = phi_injective(map, options.window);
  if (injective.is_false()) {
    throw UnsupportedError("solve needs an injective map: " + injective.explanation);
  }
  if (!injective.is_true() && !options.allow_window_only) {
    throw UnsupportedError("solve: injectivity is window-limited (" +
                           injective.explanation + "); pass the override to accept it");
  }
  std::vector<Entry> x;
  x.reserve(y.support_size());
  for (const Entry& e : y.entries()) x.push_back({map.eval(e.index), e.value});
  return SparseVector::from_entries(map.domain(), std::move(x));
}

}  // namespace genshift
