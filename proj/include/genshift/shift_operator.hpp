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

// The generalized shift sigma_phi: (x_a)_a -> (x_phi(a))_a, acting on
// finitely supported vectors.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "genshift/index_domain.hpp"
#include "genshift/sparse_vector.hpp"

namespace genshift {

// Window used for countable domains when the caller does not pick one.
inline constexpr std::uint64_t kDefaultWindow = 1024;

// sigma_phi(x) is not square summable: x_theta != 0 and fiber(theta) is
// infinite, so the value x_theta is copied infinitely often.
struct NotInL2 {
  Index theta;
};

using ApplyResult = std::variant<SparseVector, NotInL2>;

// y_b = x_eval(b). Returns NotInL2 carrying the smallest offending index.
// Throws DomainError when map and x live on different index sets.
ApplyResult apply(const IndexMap& map, const SparseVector& x);

// Like apply, but throws DomainError when the image leaves l2.
SparseVector apply_in_l2(const IndexMap& map, const SparseVector& x);

// Sum over the support of card(fiber(a)) * |x_a|^2, with 0 * inf = 0.
// Returns +inf when some x_theta != 0 has an infinite fiber.
double apply_norm_sq(const IndexMap& map, const SparseVector& x);

struct OperatorNorm {
  enum class Kind { kExact, kInfinite, kWindowLowerBound };
  Kind kind;
  // The norm for kExact, a lower bound for kWindowLowerBound, +inf otherwise.
  double value;
  std::uint64_t window = 0;
};

// sqrt of the supremum of fiber cardinalities.
OperatorNorm operator_norm(const IndexMap& map, std::uint64_t window = kDefaultWindow);

struct Verdict {
  Truth truth = Truth::kUnknown;
  // Set when truth is kUnknown (window-limited) and for some refutations.
  std::string explanation;

  static Verdict yes() { return {Truth::kTrue, {}}; }
  static Verdict no(std::string why = {}) { return {Truth::kFalse, std::move(why)}; }
  static Verdict window_only(std::string why) { return {Truth::kUnknown, std::move(why)}; }
  bool is_true() const { return truth == Truth::kTrue; }
  bool is_false() const { return truth == Truth::kFalse; }
};

struct ClassificationReport {
  Verdict maps_into_l2;
  OperatorNorm operator_norm;
  Verdict sigma_injective;   // phi surjective
  Verdict sigma_surjective;  // phi injective
  Verdict isometry;          // phi bijective
  Verdict compact;           // finite index set
};

// Two distinct indices with the same image among 1..window (all of the
// domain when finite).
std::optional<std::pair<Index, Index>> find_collision(const IndexMap& map,
                                                      std::uint64_t window);

// Injectivity and surjectivity of phi itself.
Verdict phi_injective(const IndexMap& map, std::uint64_t window);
Verdict phi_surjective(const IndexMap& map, std::uint64_t window);

ClassificationReport classify(const IndexMap& map,
                              std::uint64_t injectivity_window = kDefaultWindow,
                              std::uint64_t surjectivity_window = kDefaultWindow);

struct SolveOptions {
  // Accept a window-limited injectivity verdict on countable domains.
  bool allow_window_only = false;
  std::uint64_t window = kDefaultWindow;
};

// Preimage of y under sigma_phi for injective phi: x_eval(b) = y_b and zero
// off the image. apply(map, x) == y and norm(x) == norm(y) exactly.
// Throws UnsupportedError naming a collision pair when phi is not injective,
// or when injectivity is only window-checked and not overridden.
SparseVector solve(const IndexMap& map, const SparseVector& y,
                   const SolveOptions& options = {});

}  // namespace genshift
