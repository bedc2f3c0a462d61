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

// Index sets, total self-maps with exact fiber queries, and boundedness
// analysis of the fibers.
//
// Indices are 1-based. A finite index set is {1, ..., n} with n >= 2; the
// countable index set is {1, 2, 3, ...}, represented up to kMaxCountableIndex.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace genshift {

using Index = std::uint64_t;

inline constexpr Index kMaxCountableIndex = Index{1} << 62;

class IndexSet {
 public:
  // Throws ConstructionError when n < 2.
  static IndexSet finite(Index n);
  static IndexSet countable() { return IndexSet(0); }

  bool is_finite() const { return size_ != 0; }
  // Only meaningful for finite sets.
  Index size() const { return size_; }
  bool contains(Index i) const {
    return i >= 1 && (is_finite() ? i <= size_ : i <= kMaxCountableIndex);
  }
  // Throws DomainError naming `i` when it is not contained.
  void require(Index i) const;

  std::string describe() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  explicit IndexSet(Index size) : size_(size) {}
  Index size_;  // 0 encodes the countable set
};

// Cardinality of a fiber: a natural number or infinity.
class FiberCard {
 public:
  constexpr FiberCard() = default;
  static constexpr FiberCard finite(std::uint64_t n) { return FiberCard(n, false); }
  static constexpr FiberCard infinite() { return FiberCard(0, true); }

  constexpr bool is_finite() const { return !infinite_; }
  constexpr bool is_infinite() const { return infinite_; }
  // Precondition: is_finite().
  constexpr std::uint64_t value() const { return value_; }

  // card * |x|^2 with the convention 0 * inf = inf * 0 = 0. Returns +inf as a
  // double when the product is infinite.
  double weight(double magnitude_sq) const;

  friend constexpr bool operator==(const FiberCard&, const FiberCard&) = default;
  friend constexpr std::strong_ordering operator<=>(const FiberCard& a,
                                                    const FiberCard& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const;

 private:
  constexpr FiberCard(std::uint64_t v, bool inf) : value_(v), infinite_(inf) {}
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

// Result of a fiber query. `members` is the exact preimage in increasing
// order when the fiber is finite, and empty when it is infinite.
struct Fiber {
  FiberCard card;
  std::vector<Index> members;
};

enum class Truth { kFalse, kTrue, kUnknown };

// Facts a symbolic rule can prove about itself. Every field left at its
// default means "not proven".
struct RuleFacts {
  // Exact supremum of all fiber cardinalities, all fibers being finite.
  std::optional<std::uint64_t> fiber_bound;
  // Exact supremum of the finite fiber cardinalities (the bound over M).
  std::optional<std::uint64_t> finite_fiber_bound;
  // The finite fiber cardinalities are not uniformly bounded.
  bool unbounded_over_finite_fibers = false;
  // Exact list of the indices whose fiber is infinite.
  std::optional<std::vector<Index>> infinite_fibers;
  Truth injective = Truth::kUnknown;
  Truth surjective = Truth::kUnknown;
};

// A self-map of the countable index set given by forward evaluation plus an
// exact fiber oracle.
class SymbolicRule {
 public:
  virtual ~SymbolicRule() = default;

  virtual std::string name() const = 0;
  // Parameter for parameterised rules (block size); 0 otherwise.
  virtual std::uint64_t param() const { return 0; }
  virtual Index eval(Index k) const = 0;
  virtual Fiber fiber(Index a) const = 0;
  // Override when the cardinality is cheaper than the enumeration.
  virtual FiberCard fiber_card(Index a) const { return fiber(a).card; }
  virtual RuleFacts facts() const { return {}; }
};

class IndexMap {
 public:
  // eval(k) = images[k-1]. Throws ConstructionError naming the first
  // out-of-range position, or when images.size() < 2.
  static IndexMap finite(std::vector<Index> images);
  static IndexMap symbolic(std::shared_ptr<const SymbolicRule> rule);

  const IndexSet& domain() const { return domain_; }
  bool is_finite() const { return domain_.is_finite(); }

  // Throws DomainError when k is outside the domain, or when a symbolic rule
  // leaves the representable range.
  Index eval(Index k) const;
  Fiber fiber(Index a) const;
  FiberCard fiber_card(Index a) const;

  // Empty span for symbolic maps.
  std::span<const Index> images() const;
  // Null for finite maps.
  const SymbolicRule* rule() const { return rule_.get(); }
  // Facts of the symbolic rule; exact facts computed from the table for
  // finite maps.
  const RuleFacts& facts() const { return *facts_; }

  std::string describe() const;

 private:
  IndexMap(IndexSet domain) : domain_(domain) {}

  IndexSet domain_;
  // Finite maps: images plus fibers in CSR layout.
  std::shared_ptr<const std::vector<Index>> images_;
  std::shared_ptr<const std::vector<Index>> fiber_offsets_;
  std::shared_ptr<const std::vector<Index>> fiber_members_;
  std::shared_ptr<const SymbolicRule> rule_;
  std::shared_ptr<const RuleFacts> facts_;
};

// (outer o inner)(k) = outer(inner(k)). Both maps must be finite on the same
// index set.
IndexMap compose(const IndexMap& outer, const IndexMap& inner);

// Shipped symbolic rules on the countable index set.
namespace rules {
IndexMap successor();    // k -> k+1
IndexMap clamp_pred();   // 1 -> 1, k -> k-1
IndexMap block(std::uint64_t b);  // k -> ceil(k/b), every fiber has size b
IndexMap triangular();   // the k-th block of length k maps to k
IndexMap doubling();     // k -> 2k
IndexMap odd_collapse(); // odd k -> 1, even k -> k/2 + 1
// Looks up a shipped rule by its map-file name. Throws ConstructionError.
IndexMap by_name(std::string_view name, std::optional<std::uint64_t> param);
}  // namespace rules

struct Certified {
  std::uint64_t bound;
};
struct CertifiedUnbounded {};
struct WindowOnly {
  std::uint64_t window_sup;
  std::uint64_t window;
};
using BoundVerdict = std::variant<Certified, CertifiedUnbounded, WindowOnly>;

struct FiberReport {
  std::map<Index, FiberCard> cardinalities;
  FiberCard sup;
  BoundVerdict verdict;
  // Indices with finite fiber among those sampled. For finite domains this is
  // exactly M.
  std::vector<Index> m_set;
  std::uint64_t window = 0;  // 0 for finite domains (full scan)
};

// Full scan on finite domains; indices 1..window on the countable set.
// Throws IntegrityError when the rule's declared facts contradict the fibers
// seen on the window, and UnsupportedError when window == 0.
FiberReport fiber_report(const IndexMap& map, std::uint64_t window);

}  // namespace genshift
