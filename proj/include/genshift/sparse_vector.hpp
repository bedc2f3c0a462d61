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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "genshift/index_domain.hpp"

namespace genshift {

using Scalar = std::complex<double>;

struct Entry {
  Index index;
  Scalar value;

  friend bool operator==(const Entry&, const Entry&) = default;
};

// A finitely supported vector of l2 over an index set. Entries are kept
// sorted by index, and no stored value is exactly zero.
class SparseVector {
 public:
  explicit SparseVector(IndexSet domain) : domain_(domain) {}

  // Sums duplicate indices and drops exact zeros. Throws DomainError for
  // indices outside `domain`.
  static SparseVector from_entries(IndexSet domain, std::vector<Entry> entries);
  static SparseVector from_entries(IndexSet domain,
                                   std::initializer_list<Entry> entries) {
    return from_entries(domain, std::vector<Entry>(entries));
  }

  // The Kronecker delta at theta; its norm is exactly 1.
  static SparseVector unit(IndexSet domain, Index theta);

  const IndexSet& domain() const { return domain_; }
  std::span<const Entry> entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  // Value at i; zero off the support.
  Scalar at(Index i) const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  friend SparseVector add(const SparseVector&, const SparseVector&);
  friend SparseVector scale(Scalar, const SparseVector&);

  IndexSet domain_;
  std::vector<Entry> entries_;
};

SparseVector add(const SparseVector& x, const SparseVector& y);
SparseVector scale(Scalar c, const SparseVector& x);
// x - y
SparseVector subtract(const SparseVector& x, const SparseVector& y);

// Sum over the common support of x_a * conj(y_a).
Scalar inner(const SparseVector& x, const SparseVector& y);
double norm_sq(const SparseVector& x);
double norm(const SparseVector& x);

}  // namespace genshift
