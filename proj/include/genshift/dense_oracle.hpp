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

// Brute-force dense realization of sigma_phi on Finite(n). Built from forward
// evaluation only, never from the fiber tables, so it can check them.

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

#include "genshift/index_domain.hpp"
#include "genshift/sparse_vector.hpp"

namespace genshift {

inline constexpr std::uint64_t kDefaultSeed = 42;

// entries(a, b) = 1 when eval(a) = b, so (A x)_a = x_eval(a).
class DenseOperator {
 public:
  explicit DenseOperator(std::size_t n) : n_(n), entries_(n * n, 0) {}

  std::size_t size() const { return n_; }
  // 1-based, like indices.
  std::uint8_t operator()(Index row, Index col) const {
    return entries_[(row - 1) * n_ + (col - 1)];
  }
  void set(Index row, Index col, std::uint8_t v) {
    entries_[(row - 1) * n_ + (col - 1)] = v;
  }
  std::uint64_t row_sum(Index row) const;
  std::uint64_t column_sum(Index col) const;

  std::vector<Scalar> multiply(std::span<const Scalar> x) const;
  std::vector<double> multiply(std::span<const double> x) const;
  std::vector<double> multiply_transposed(std::span<const double> x) const;

 private:
  std::size_t n_;
  std::vector<std::uint8_t> entries_;
};

// Throws UnsupportedError for countable domains.
DenseOperator to_dense(const IndexMap& map);

struct SpectralNormOptions {
  double tolerance = 1e-12;
  int max_iterations = 10'000;
  std::uint64_t seed = kDefaultSeed;
};

// Largest singular value by power iteration on A^T A from a seeded random
// start. Converged when ||A^T A v - lambda v|| <= tolerance * max(lambda, 1).
// Throws NumericError carrying the last residual when the cap is hit.
double spectral_norm(const DenseOperator& a, const SpectralNormOptions& options = {});

// Rank by fraction-free (Bareiss) elimination over the integers.
std::size_t exact_rank(const DenseOperator& a);

struct StructuralCheck {
  std::size_t rank = 0;
  bool injective = false;
  bool surjective = false;
  bool unitary = false;  // A^T A = I exactly
};

StructuralCheck structural_check(const DenseOperator& a);

inline constexpr std::uint64_t kMaxExhaustiveN = 7;

// All n^n image tables on Finite(n) in lexicographic order.
class ExhaustiveMaps {
 public:
  // Throws ConstructionError for n < 2 and UnsupportedError for n > 7.
  explicit ExhaustiveMaps(std::uint64_t n);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = std::vector<Index>;
    using difference_type = std::ptrdiff_t;
    using pointer = const value_type*;
    using reference = const value_type&;

    iterator() = default;
    explicit iterator(std::uint64_t n) : images_(n, 1), done_(false) {}

    reference operator*() const { return images_; }
    pointer operator->() const { return &images_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    bool operator==(const iterator& other) const {
      return done_ == other.done_ && (done_ || images_ == other.images_);
    }

   private:
    std::vector<Index> images_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_); }
  iterator end() const { return iterator(); }
  std::uint64_t count() const;

 private:
  std::uint64_t n_;
};

}  // namespace genshift
