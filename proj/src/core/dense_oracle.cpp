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

#include "genshift/dense_oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <random>

#include "genshift/errors.hpp"

namespace genshift {

std::uint64_t DenseOperator::row_sum(Index row) const {
  std::uint64_t s = 0;
  for (Index c = 1; c <= n_; ++c) s += (*this)(row, c);
  return s;
}

std::uint64_t DenseOperator::column_sum(Index col) const {
  std::uint64_t s = 0;
  for (Index r = 1; r <= n_; ++r) s += (*this)(r, col);
  return s;
}

std::vector<Scalar> DenseOperator::multiply(std::span<const Scalar> x) const {
  std::vector<Scalar> y(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (entries_[r * n_ + c]) y[r] += x[c];
    }
  }
  return y;
}

std::vector<double> DenseOperator::multiply(std::span<const double> x) const {
  std::vector<double> y(n_, 0.0);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) y[r] += entries_[r * n_ + c] * x[c];
  }
  return y;
}

std::vector<double> DenseOperator::multiply_transposed(std::span<const double> x) const {
  std::vector<double> y(n_, 0.0);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) y[c] += entries_[r * n_ + c] * x[r];
  }
  return y;
}

DenseOperator to_dense(const IndexMap& map) {
  if (!map.is_finite()) {
    throw UnsupportedError("to_dense needs a finite index set, got " +
                           map.domain().describe());
  }
  const std::size_t n = map.domain().size();
  DenseOperator a(n);
  for (Index row = 1; row <= n; ++row) a.set(row, map.eval(row), 1);
  return a;
}

namespace {

double euclidean_norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

double spectral_norm(const DenseOperator& a, const SpectralNormOptions& options) {
  const std::size_t n = a.size();
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> dist(0.5, 1.5);
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  double len = euclidean_norm(v);
  for (double& x : v) x /= len;

  double residual = 0.0;
  for (int it = 0; it < options.max_iterations; ++it) {
    const std::vector<double> av = a.multiply(std::span<const double>(v));
    const std::vector<double> w = a.multiply_transposed(std::span<const double>(av));
    // Rayleigh quotient of A^T A at the unit vector v.
    double lambda = 0.0;
    for (std::size_t i = 0; i < n; ++i) lambda += v[i] * w[i];
    double r2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = w[i] - lambda * v[i];
      r2 += d * d;
    }
    residual = std::sqrt(r2);
    if (residual <= options.tolerance * std::max(lambda, 1.0)) {
      return std::sqrt(std::max(lambda, 0.0));
    }
    len = euclidean_norm(w);
    if (len == 0.0) return 0.0;
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / len;
  }
  throw NumericError("power iteration did not converge in " +
                         std::to_string(options.max_iterations) +
                         " iterations, residual " + std::to_string(residual),
                     residual);
}

std::size_t exact_rank(const DenseOperator& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m[r][c] = a(r + 1, c + 1);
  }
  std::size_t rank = 0;
  std::int64_t prev_pivot = 1;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < n; ++r) {
      for (std::size_t c = col + 1; c < n; ++c) {
        // Bareiss step; the division is exact.
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev_pivot;
      }
      m[r][col] = 0;
    }
    prev_pivot = m[rank][col];
    ++rank;
  }
  return rank;
}

StructuralCheck structural_check(const DenseOperator& a) {
  const std::size_t n = a.size();
  StructuralCheck out;
  out.rank = exact_rank(a);
  out.injective = out.rank == n;
  out.surjective = out.rank == n;
  out.unitary = true;
  for (Index i = 1; i <= n && out.unitary; ++i) {
    for (Index j = 1; j <= n && out.unitary; ++j) {
      std::int64_t dot = 0;
      for (Index r = 1; r <= n; ++r) dot += a(r, i) * a(r, j);
      out.unitary = dot == (i == j ? 1 : 0);
    }
  }
  return out;
}

ExhaustiveMaps::ExhaustiveMaps(std::uint64_t n) : n_(n) {
  if (n < 2) {
    throw ConstructionError("exhaustive_maps: finite index sets have at least 2 "
                            "elements, got " + std::to_string(n));
  }
  if (n > kMaxExhaustiveN) {
    throw UnsupportedError("exhaustive_maps: n = " + std::to_string(n) +
                           " exceeds the cap of " + std::to_string(kMaxExhaustiveN));
  }
}

std::uint64_t ExhaustiveMaps::count() const {
  std::uint64_t c = 1;
  for (std::uint64_t i = 0; i < n_; ++i) c *= n_;
  return c;
}

ExhaustiveMaps::iterator& ExhaustiveMaps::iterator::operator++() {
  const Index n = images_.size();
  // Odometer with the last position varying fastest.
  for (std::size_t pos = images_.size(); pos-- > 0;) {
    if (images_[pos] < n) {
      ++images_[pos];
      return *this;
    }
    images_[pos] = 1;
  }
  done_ = true;
  return *this;
}

}  // namespace genshift
