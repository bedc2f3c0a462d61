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

#include "genshift/compactness.hpp"

#include <cmath>

#include "gtest/gtest.h"
#include "genshift/errors.hpp"
#include "genshift/shift_operator.hpp"
#include "test_support.hpp"

namespace genshift {
namespace {

using Rational = boost::rational<std::int64_t>;

TEST(IsCompactTest, ExactlyOnFiniteDomains) {
  EXPECT_TRUE(is_compact(IndexMap::finite({1, 1})));
  EXPECT_TRUE(is_compact(IndexMap::finite({3, 1, 2})));
  for (const IndexMap& m : {rules::successor(), rules::block(2), rules::triangular(),
                            rules::odd_collapse()}) {
    EXPECT_FALSE(is_compact(m)) << m.describe();
  }
}

// Exact rational ||a - b||^2 for vectors with dyadic real entries, from the
// applied images rather than from fiber sizes.
Rational exact_distance_sq(const SparseVector& a, const SparseVector& b) {
  Rational sum = 0;
  const SparseVector d = subtract(a, b);
  for (const Entry& e : d.entries()) {
    const Rational v(static_cast<std::int64_t>(std::lround(e.value.real() * 4)), 4);
    EXPECT_EQ(e.value.imag(), 0.0);
    sum += v * v;
  }
  return sum;
}

TEST(WitnessSequenceTest, SuccessorHundred) {
  const IndexMap s = rules::successor();
  const WitnessSequence w = witness_sequence(s, 100, 8);
  ASSERT_EQ(w.vectors.size(), 100u);
  // fiber(1) is empty, so the search starts at 2.
  EXPECT_EQ(w.indices.front(), 2u);
  EXPECT_EQ(w.indices.back(), 101u);
  EXPECT_GE(w.window_used, 101u);
  EXPECT_EQ(w.min_separation_sq, Rational(1, 2));
  EXPECT_TRUE(w.separated());
  EXPECT_EQ(w.min_separation(), std::sqrt(2.0) / 2.0);

  std::vector<SparseVector> images;
  for (const SparseVector& v : w.vectors) {
    ASSERT_EQ(norm(v), 0.5);
    images.push_back(apply_in_l2(s, v));
  }
  Rational smallest(1000);
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      smallest = std::min(smallest, exact_distance_sq(images[i], images[j]));
    }
  }
  EXPECT_EQ(smallest, w.min_separation_sq);
}

TEST(WitnessSequenceTest, LargerFibersSeparateFurther) {
  const WitnessSequence w = witness_sequence(rules::block(3), 5, 2);
  EXPECT_EQ(w.indices, (std::vector<Index>{1, 2, 3, 4, 5}));
  EXPECT_EQ(w.min_separation_sq, Rational(3, 2));
  EXPECT_TRUE(w.separated());

  const WitnessSequence c = witness_sequence(rules::clamp_pred(), 4, 4);
  EXPECT_EQ(c.fiber_sizes, (std::vector<std::uint64_t>{2, 1, 1, 1}));
  EXPECT_EQ(c.min_separation_sq, Rational(1, 2));
}

TEST(WitnessSequenceTest, Preconditions) {
  EXPECT_THROW(witness_sequence(IndexMap::finite({1, 2}), 2, 2), UnsupportedError);
  EXPECT_THROW(witness_sequence(rules::successor(), 1, 2), UnsupportedError);
  EXPECT_THROW(witness_sequence(rules::successor(), 2, 0), UnsupportedError);
  EXPECT_THROW(witness_sequence(rules::triangular(), 3, 16), UnsupportedError);
  EXPECT_THROW(witness_sequence(rules::odd_collapse(), 3, 16), UnsupportedError);
  // Doubling hits only even indices, but there are plenty below the cap.
  EXPECT_EQ(witness_sequence(rules::doubling(), 10, 1).indices.back(), 20u);
  EXPECT_THROW(witness_sequence(rules::doubling(), 10, 1, 8), SearchExhaustedError);
}

}  // namespace
}  // namespace genshift
