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

#include "genshift/index_domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

#include "genshift/errors.hpp"

namespace genshift {

IndexSet IndexSet::finite(Index n) {
  if (n < 2) {
    throw ConstructionError("finite index set needs at least 2 elements, got " +
                            std::to_string(n));
  }
  return IndexSet(n);
}

void IndexSet::require(Index i) const {
  if (!contains(i)) {
    throw DomainError("index " + std::to_string(i) + " is outside " + describe());
  }
}

std::string IndexSet::describe() const {
  return is_finite() ? "Finite(" + std::to_string(size_) + ")" : "Countable";
}

double FiberCard::weight(double magnitude_sq) const {
  if (magnitude_sq == 0.0) return 0.0;
  if (infinite_) return std::numeric_limits<double>::infinity();
  return static_cast<double>(value_) * magnitude_sq;
}

std::string FiberCard::to_string() const {
  return infinite_ ? "infinite" : std::to_string(value_);
}

namespace {

Fiber finite_fiber(std::vector<Index> members) {
  Fiber f;
  f.card = FiberCard::finite(members.size());
  f.members = std::move(members);
  return f;
}

Fiber range_fiber(Index first, Index last) {
  std::vector<Index> members;
  if (first <= last) {
    members.reserve(last - first + 1);
    for (Index i = first; i <= last; ++i) members.push_back(i);
  }
  return finite_fiber(std::move(members));
}

void require_representable(Index image, Index k, const std::string& rule) {
  if (image > kMaxCountableIndex) {
    throw DomainError(rule + "(" + std::to_string(k) +
                      ") leaves the representable index range");
  }
}

class Successor final : public SymbolicRule {
 public:
  std::string name() const override { return "successor"; }
  Index eval(Index k) const override {
    require_representable(k + 1, k, name());
    return k + 1;
  }
  Fiber fiber(Index a) const override {
    if (a == 1) return finite_fiber({});
    return finite_fiber({a - 1});
  }
  FiberCard fiber_card(Index a) const override {
    return FiberCard::finite(a == 1 ? 0 : 1);
  }
  RuleFacts facts() const override {
    RuleFacts f;
    f.fiber_bound = 1;
    f.finite_fiber_bound = 1;
    f.infinite_fibers = std::vector<Index>{};
    f.injective = Truth::kTrue;
    f.surjective = Truth::kFalse;  // 1 has no predecessor
    return f;
  }
};

class ClampPred final : public SymbolicRule {
 public:
  std::string name() const override { return "clamp_pred"; }
  Index eval(Index k) const override { return k == 1 ? 1 : k - 1; }
  Fiber fiber(Index a) const override {
    if (a == 1) return finite_fiber({1, 2});
    return finite_fiber({a + 1});
  }
  FiberCard fiber_card(Index a) const override {
    return FiberCard::finite(a == 1 ? 2 : 1);
  }
  RuleFacts facts() const override {
    RuleFacts f;
    f.fiber_bound = 2;
    f.finite_fiber_bound = 2;
    f.infinite_fibers = std::vector<Index>{};
    f.injective = Truth::kFalse;  // 1 and 2 collide
    f.surjective = Truth::kTrue;
    return f;
  }
};

class Block final : public SymbolicRule {
 public:
  explicit Block(std::uint64_t b) : b_(b) {}
  std::string name() const override { return "block"; }
  std::uint64_t param() const override { return b_; }
  Index eval(Index k) const override { return (k - 1) / b_ + 1; }
  Fiber fiber(Index a) const override {
    return range_fiber((a - 1) * b_ + 1, a * b_);
  }
  FiberCard fiber_card(Index) const override { return FiberCard::finite(b_); }
  RuleFacts facts() const override {
    RuleFacts f;
    f.fiber_bound = b_;
    f.finite_fiber_bound = b_;
    f.infinite_fibers = std::vector<Index>{};
    f.injective = b_ == 1 ? Truth::kTrue : Truth::kFalse;
    f.surjective = Truth::kTrue;
    return f;
  }

 private:
  std::uint64_t b_;
};

// Blocks {1}, {2,3}, {4,5,6}, ...; the fiber of k is the k-th block.
class Triangular final : public SymbolicRule {
 public:
  std::string name() const override { return "triangular"; }
  Index eval(Index j) const override {
    auto k = static_cast<Index>(
        (std::sqrt(8.0L * static_cast<long double>(j) + 1.0L) - 1.0L) / 2.0L);
    if (k < 1) k = 1;
    while (tri(k) < j) ++k;
    while (k > 1 && tri(k - 1) >= j) --k;
    return k;
  }
  Fiber fiber(Index a) const override {
    return range_fiber(static_cast<Index>(tri(a - 1) + 1),
                       static_cast<Index>(tri(a)));
  }
  FiberCard fiber_card(Index a) const override { return FiberCard::finite(a); }
  RuleFacts facts() const override {
    RuleFacts f;
    f.unbounded_over_finite_fibers = true;
    f.infinite_fibers = std::vector<Index>{};
    f.injective = Truth::kFalse;  // 2 and 3 collide
    f.surjective = Truth::kTrue;
    return f;
  }

 private:
  static unsigned __int128 tri(Index k) {
    return static_cast<unsigned __int128>(k) * (k + 1) / 2;
  }
};

class Doubling final : public SymbolicRule {
 public:
  std::string name() const override { return "doubling"; }
  Index eval(Index k) const override {
    require_representable(k <= kMaxCountableIndex / 2 ? 2 * k : kMaxCountableIndex + 1,
                          k, name());
    return 2 * k;
  }
  Fiber fiber(Index a) const override {
    if (a % 2 == 1) return finite_fiber({});
    return finite_fiber({a / 2});
  }
  FiberCard fiber_card(Index a) const override {
    return FiberCard::finite(a % 2 == 0 ? 1 : 0);
  }
  RuleFacts facts() const override {
    RuleFacts f;
    f.fiber_bound = 1;
    f.finite_fiber_bound = 1;
    f.infinite_fibers = std::vector<Index>{};
    f.injective = Truth::kTrue;
    f.surjective = Truth::kFalse;  // odd indices are missed
    return f;
  }
};

// Every odd index collapses onto 1; even k goes to k/2 + 1.
class OddCollapse final : public SymbolicRule {
 public:
  std::string name() const override { return "odd_collapse"; }
  Index eval(Index k) const override { return k % 2 == 1 ? 1 : k / 2 + 1; }
  Fiber fiber(Index a) const override {
    if (a == 1) return Fiber{FiberCard::infinite(), {}};
    return finite_fiber({2 * a - 2});
  }
  FiberCard fiber_card(Index a) const override {
    return a == 1 ? FiberCard::infinite() : FiberCard::finite(1);
  }
  RuleFacts facts() const override {
    RuleFacts f;
    f.finite_fiber_bound = 1;
    f.infinite_fibers = std::vector<Index>{1};
    f.injective = Truth::kFalse;
    f.surjective = Truth::kTrue;
    return f;
  }
};

}  // namespace

IndexMap IndexMap::finite(std::vector<Index> images) {
  const Index n = images.size();
  if (n < 2) {
    throw ConstructionError("finite map needs at least 2 images, got " +
                            std::to_string(n));
  }
  for (std::size_t pos = 0; pos < images.size(); ++pos) {
    if (images[pos] < 1 || images[pos] > n) {
      throw ConstructionError("image at position " + std::to_string(pos + 1) +
                              " is " + std::to_string(images[pos]) +
                              ", outside [1, " + std::to_string(n) + "]");
    }
  }

  std::vector<Index> offsets(n + 1, 0);
  for (Index img : images) ++offsets[img];
  std::uint64_t max_card = 0;
  bool all_hit = true;
  for (Index a = 1; a <= n; ++a) {
    max_card = std::max<std::uint64_t>(max_card, offsets[a]);
    all_hit = all_hit && offsets[a] > 0;
  }
  // Exclusive prefix sums shifted so fiber(a) = members[offsets[a-1], offsets[a]).
  for (Index a = 1; a <= n; ++a) offsets[a] += offsets[a - 1];
  std::vector<Index> members(n);
  std::vector<Index> cursor(offsets.begin(), offsets.end() - 1);
  for (Index k = 1; k <= n; ++k) members[cursor[images[k - 1] - 1]++] = k;

  RuleFacts facts;
  facts.fiber_bound = max_card;
  facts.finite_fiber_bound = max_card;
  facts.infinite_fibers = std::vector<Index>{};
  facts.injective = max_card <= 1 ? Truth::kTrue : Truth::kFalse;
  facts.surjective = all_hit ? Truth::kTrue : Truth::kFalse;

  IndexMap map(IndexSet::finite(n));
  map.images_ = std::make_shared<const std::vector<Index>>(std::move(images));
  map.fiber_offsets_ = std::make_shared<const std::vector<Index>>(std::move(offsets));
  map.fiber_members_ = std::make_shared<const std::vector<Index>>(std::move(members));
  map.facts_ = std::make_shared<const RuleFacts>(std::move(facts));
  return map;
}

IndexMap IndexMap::symbolic(std::shared_ptr<const SymbolicRule> rule) {
  if (!rule) throw ConstructionError("symbolic map needs a rule");
  IndexMap map(IndexSet::countable());
  map.facts_ = std::make_shared<const RuleFacts>(rule->facts());
  map.rule_ = std::move(rule);
  return map;
}

Index IndexMap::eval(Index k) const {
  domain_.require(k);
  if (images_) return (*images_)[k - 1];
  Index image = rule_->eval(k);
  if (!domain_.contains(image)) {
    throw DomainError(rule_->name() + "(" + std::to_string(k) +
                      ") = " + std::to_string(image) + " is outside the domain");
  }
  return image;
}

Fiber IndexMap::fiber(Index a) const {
  domain_.require(a);
  if (images_) {
    const auto& off = *fiber_offsets_;
    std::vector<Index> members(fiber_members_->begin() + off[a - 1],
                               fiber_members_->begin() + off[a]);
    return finite_fiber(std::move(members));
  }
  return rule_->fiber(a);
}

FiberCard IndexMap::fiber_card(Index a) const {
  domain_.require(a);
  if (images_) {
    const auto& off = *fiber_offsets_;
    return FiberCard::finite(off[a] - off[a - 1]);
  }
  return rule_->fiber_card(a);
}

std::span<const Index> IndexMap::images() const {
  if (!images_) return {};
  return *images_;
}

std::string IndexMap::describe() const {
  if (rule_) {
    std::string s = "symbolic:" + rule_->name();
    if (rule_->param() != 0) s += "(" + std::to_string(rule_->param()) + ")";
    return s;
  }
  std::string s = "finite:[";
  for (std::size_t i = 0; i < images_->size(); ++i) {
    if (i) s += ",";
    s += std::to_string((*images_)[i]);
  }
  return s + "]";
}

IndexMap compose(const IndexMap& outer, const IndexMap& inner) {
  if (!outer.is_finite() || !inner.is_finite()) {
    throw UnsupportedError("compose is defined for finite maps only");
  }
  if (!(outer.domain() == inner.domain())) {
    throw DomainError("compose: " + outer.domain().describe() + " vs " +
                      inner.domain().describe());
  }
  std::vector<Index> images(inner.domain().size());
  for (Index k = 1; k <= images.size(); ++k) {
    images[k - 1] = outer.eval(inner.eval(k));
  }
  return IndexMap::finite(std::move(images));
}

namespace rules {

IndexMap successor() { return IndexMap::symbolic(std::make_shared<Successor>()); }
IndexMap clamp_pred() { return IndexMap::symbolic(std::make_shared<ClampPred>()); }
IndexMap block(std::uint64_t b) {
  if (b < 1) throw ConstructionError("block size must be at least 1");
  return IndexMap::symbolic(std::make_shared<Block>(b));
}
IndexMap triangular() { return IndexMap::symbolic(std::make_shared<Triangular>()); }
IndexMap doubling() { return IndexMap::symbolic(std::make_shared<Doubling>()); }
IndexMap odd_collapse() {
  return IndexMap::symbolic(std::make_shared<OddCollapse>());
}

IndexMap by_name(std::string_view name, std::optional<std::uint64_t> param) {
  if (name == "block") {
    if (!param) throw ConstructionError("rule 'block' needs a param");
    return block(*param);
  }
  if (param) {
    throw ConstructionError("rule '" + std::string(name) + "' takes no param");
  }
  if (name == "successor") return successor();
  if (name == "clamp_pred") return clamp_pred();
  if (name == "triangular") return triangular();
  if (name == "doubling") return doubling();
  if (name == "odd_collapse") return odd_collapse();
  throw ConstructionError("unknown rule '" + std::string(name) + "'");
}

}  // namespace rules

namespace {

// Fibers larger than this are not enumerated during the soundness spot check.
constexpr std::uint64_t kSpotCheckFiberLimit = 4096;
// Only the first indices of a window are spot checked.
constexpr Index kSpotCheckWindow = 1024;

void spot_check_fiber(const IndexMap& map, Index a, const FiberCard& card) {
  if (card.is_infinite() || card.value() > kSpotCheckFiberLimit) return;
  Fiber f = map.fiber(a);
  if (!(f.card == card) || f.members.size() != card.value()) {
    throw IntegrityError(map.describe() + ": fiber(" + std::to_string(a) +
                         ") enumerates " + std::to_string(f.members.size()) +
                         " members but reports cardinality " + card.to_string());
  }
  for (Index m : f.members) {
    if (map.eval(m) != a) {
      throw IntegrityError(map.describe() + ": " + std::to_string(m) +
                           " is listed in fiber(" + std::to_string(a) +
                           ") but maps to " + std::to_string(map.eval(m)));
    }
  }
}

}  // namespace

FiberReport fiber_report(const IndexMap& map, std::uint64_t window) {
  FiberReport report;
  const RuleFacts& facts = map.facts();

  if (map.is_finite()) {
    const Index n = map.domain().size();
    std::uint64_t sup = 0;
    for (Index a = 1; a <= n; ++a) {
      FiberCard c = map.fiber_card(a);
      report.cardinalities.emplace(a, c);
      report.m_set.push_back(a);
      sup = std::max(sup, c.value());
    }
    report.sup = FiberCard::finite(sup);
    report.verdict = Certified{sup};
    return report;
  }

  if (window == 0) throw UnsupportedError("fiber_report: window must be >= 1");
  report.window = window;

  bool saw_infinite = false;
  std::uint64_t finite_sup = 0;
  std::unordered_set<Index> declared_infinite;
  if (facts.infinite_fibers) {
    declared_infinite.insert(facts.infinite_fibers->begin(),
                             facts.infinite_fibers->end());
  }

  for (Index a = 1; a <= window; ++a) {
    FiberCard c = map.fiber_card(a);
    report.cardinalities.emplace(a, c);
    if (a <= kSpotCheckWindow) spot_check_fiber(map, a, c);
    if (facts.infinite_fibers && c.is_infinite() != declared_infinite.contains(a)) {
      throw IntegrityError(map.describe() + ": fiber(" + std::to_string(a) +
                           ") is " + c.to_string() +
                           ", contradicting the declared infinite-fiber set");
    }
    if (c.is_infinite()) {
      saw_infinite = true;
      continue;
    }
    report.m_set.push_back(a);
    finite_sup = std::max(finite_sup, c.value());
    if (facts.finite_fiber_bound && c.value() > *facts.finite_fiber_bound) {
      throw IntegrityError(map.describe() + ": fiber(" + std::to_string(a) +
                           ") has " + c.to_string() + " members, above the " +
                           "declared bound " +
                           std::to_string(*facts.finite_fiber_bound));
    }
  }
  // Forward evaluation must land in the fiber it claims.
  for (Index b = 1; b <= std::min(window, kSpotCheckWindow); ++b) {
    Index a = map.eval(b);
    FiberCard c = map.fiber_card(a);
    if (c.is_finite() && c.value() <= kSpotCheckFiberLimit) {
      const Fiber f = map.fiber(a);
      if (!std::binary_search(f.members.begin(), f.members.end(), b)) {
        throw IntegrityError(map.describe() + ": " + std::to_string(b) +
                             " maps to " + std::to_string(a) +
                             " but is missing from its fiber");
      }
    }
  }

  report.sup = saw_infinite ? FiberCard::infinite() : FiberCard::finite(finite_sup);

  if (facts.fiber_bound) {
    if (saw_infinite || finite_sup > *facts.fiber_bound) {
      throw IntegrityError(map.describe() + ": window sup " +
                           report.sup.to_string() +
                           " contradicts the declared fiber bound " +
                           std::to_string(*facts.fiber_bound));
    }
    report.verdict = Certified{*facts.fiber_bound};
  } else if (saw_infinite || facts.unbounded_over_finite_fibers ||
             !declared_infinite.empty()) {
    report.verdict = CertifiedUnbounded{};
  } else {
    report.verdict = WindowOnly{finite_sup, window};
  }
  return report;
}

}  // namespace genshift
