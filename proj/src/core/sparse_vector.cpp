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

#include "genshift/sparse_vector.hpp"

#include <algorithm>
#include <cmath>

#include "genshift/errors.hpp"

namespace genshift {

namespace {

void require_same_domain(const SparseVector& x, const SparseVector& y) {
  if (!(x.domain() == y.domain())) {
    throw DomainError("vectors live on different index sets: " +
                      x.domain().describe() + " vs " + y.domain().describe());
  }
}

}  // namespace

SparseVector SparseVector::from_entries(IndexSet domain, std::vector<Entry> entries) {
  for (const Entry& e : entries) domain.require(e.index);
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.index < b.index; });
  SparseVector v(domain);
  v.entries_.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size();) {
    Entry acc = entries[i++];
    while (i < entries.size() && entries[i].index == acc.index) {
      acc.value += entries[i++].value;
    }
    if (acc.value != Scalar{}) v.entries_.push_back(acc);
  }
  return v;
}

SparseVector SparseVector::unit(IndexSet domain, Index theta) {
  domain.require(theta);
  SparseVector v(domain);
  v.entries_.push_back({theta, Scalar{1.0}});
  return v;
}

Scalar SparseVector::at(Index i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, Index k) { return e.index < k; });
  if (it != entries_.end() && it->index == i) return it->value;
  return {};
}

SparseVector add(const SparseVector& x, const SparseVector& y) {
  require_same_domain(x, y);
  SparseVector out(x.domain());
  out.entries_.reserve(x.entries_.size() + y.entries_.size());
  auto xi = x.entries_.begin();
  auto yi = y.entries_.begin();
  while (xi != x.entries_.end() || yi != y.entries_.end()) {
    if (yi == y.entries_.end() || (xi != x.entries_.end() && xi->index < yi->index)) {
      out.entries_.push_back(*xi++);
    } else if (xi == x.entries_.end() || yi->index < xi->index) {
      out.entries_.push_back(*yi++);
    } else {
      Scalar s = xi->value + yi->value;
      if (s != Scalar{}) out.entries_.push_back({xi->index, s});
      ++xi;
      ++yi;
    }
  }
  return out;
}

SparseVector scale(Scalar c, const SparseVector& x) {
  SparseVector out(x.domain());
  if (c == Scalar{}) return out;
  out.entries_.reserve(x.entries_.size());
  for (const Entry& e : x.entries_) {
    Scalar s = c * e.value;
    // Underflow can still produce an exact zero.
    if (s != Scalar{}) out.entries_.push_back({e.index, s});
  }
  return out;
}

SparseVector subtract(const SparseVector& x, const SparseVector& y) {
  return add(x, scale(Scalar{-1.0}, y));
}

Scalar inner(const SparseVector& x, const SparseVector& y) {
  require_same_domain(x, y);
  Scalar sum{};
  auto xs = x.entries();
  auto ys = y.entries();
  auto xi = xs.begin();
  auto yi = ys.begin();
  while (xi != xs.end() && yi != ys.end()) {
    if (xi->index < yi->index) {
      ++xi;
    } else if (yi->index < xi->index) {
      ++yi;
    } else {
      sum += xi->value * std::conj(yi->value);
      ++xi;
      ++yi;
    }
  }
  return sum;
}

double norm_sq(const SparseVector& x) {
  double sum = 0.0;
  for (const Entry& e : x.entries()) sum += std::norm(e.value);
  return sum;
}

double norm(const SparseVector& x) { return std::sqrt(norm_sq(x)); }

}  // namespace genshift
