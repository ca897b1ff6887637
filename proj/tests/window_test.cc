// Copyright 2026 The salt_pepper Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "salt_pepper/window.h"

#include <vector>

#include "gtest/gtest.h"
#include "test_util.h"

namespace salt_pepper {
namespace {

using V = std::vector<Intensity>;

TEST(ExtractWindowTest, InteriorFullWindow) {
  const WindowView w = ExtractWindow(Plane(3, 3, 7), 1, 1, 3);
  EXPECT_EQ(w.values, V(9, 7));
  EXPECT_EQ(w.clean_count(), 9);
  EXPECT_EQ(w.center, 7);
}

TEST(ExtractWindowTest, CornerIsTruncated) {
  const WindowView w = ExtractWindow(Plane(5, 4, 3), 0, 0, 3);
  EXPECT_EQ(w.values.size(), 4u);
  EXPECT_EQ(w.side, 3);
  const WindowView far = ExtractWindow(Plane(5, 4, 3), 3, 4, 5);
  EXPECT_EQ(far.values.size(), 9u);
}

TEST(ExtractWindowTest, GoldenMatrixAtSideSeven) {
  const WindowView w = ExtractWindow(testing::GoldenMatrix(), 4, 4, 7);
  EXPECT_EQ(w.values.size(), 49u);
  EXPECT_EQ(w.clean_count(), 11);
  EXPECT_EQ(w.clean_values,
            (V{67, 97, 115, 116, 116, 118, 119, 123, 134, 178, 187}));
  EXPECT_EQ(w.center, 255);
}

TEST(ExtractWindowTest, GoldenMatrixSmallerSides) {
  const Plane g = testing::GoldenMatrix();
  const WindowView w3 = ExtractWindow(g, 4, 4, 3);
  EXPECT_EQ(w3.values, (V{134, 0, 0, 0, 255, 123, 255, 255, 0}));
  EXPECT_EQ(w3.clean_values, (V{123, 134}));
  EXPECT_EQ(ExtractWindow(g, 4, 4, 5).clean_values, (V{116, 123, 134}));
}

TEST(ExtractWindowTest, Invariants) {
  std::mt19937_64 rng(9);
  const Plane p = testing::RandomPlane(11, 7, 0.5, rng);
  for (int side : {1, 3, 5, 9, 15}) {
    for (int r = 0; r < p.height(); ++r) {
      for (int c = 0; c < p.width(); ++c) {
        const WindowView w = ExtractWindow(p, r, c, side);
        const int rad = side / 2;
        const bool inside = r - rad >= 0 && c - rad >= 0 &&
                            r + rad < p.height() && c + rad < p.width();
        ASSERT_LE(w.values.size(), static_cast<size_t>(side * side));
        ASSERT_EQ(w.values.size() == static_cast<size_t>(side * side), inside);
        ASSERT_TRUE(
            std::is_sorted(w.clean_values.begin(), w.clean_values.end()));
        size_t clean_in_values = 0;
        for (Intensity v : w.values) clean_in_values += !IsImpulse(v);
        ASSERT_EQ(clean_in_values, w.clean_values.size());
        for (Intensity v : w.clean_values) ASSERT_FALSE(IsImpulse(v));
      }
    }
  }
}

TEST(MedianIntTest, Examples) {
  EXPECT_EQ(MedianInt(V{67, 97, 115, 116, 116, 118, 119, 123, 134, 178, 187}),
            118);
  EXPECT_EQ(MedianInt(V{5}), 5);
  EXPECT_EQ(MedianInt(V{10, 11}), 11);
  EXPECT_EQ(MedianInt(V{11, 10}), 11);
  EXPECT_EQ(MedianInt(V{123, 134}), 129);
  EXPECT_EQ(MedianInt(V{0, 255}), 128);
  EXPECT_EQ(MedianInt(V{3, 1, 2}), 2);
}

TEST(MeanIntTest, Examples) {
  EXPECT_EQ(MeanInt(V{0, 0, 0, 255, 255, 255, 0, 255, 0}), 113);
  EXPECT_EQ(MeanInt(V{128}), 128);
  EXPECT_EQ(MeanInt(V{0, 255}), 128);
  EXPECT_EQ(MeanInt(V{1, 2}), 2);
  EXPECT_EQ(MeanInt(V{1, 1, 2}), 1);
  EXPECT_EQ(MeanInt(V(81, 255)), 255);
}

TEST(WindowDeathTest, EmptyInputsAreContractViolations) {
  EXPECT_DEATH(MedianInt(V{}), "median of empty");
  EXPECT_DEATH(MeanInt(V{}), "mean of empty");
  EXPECT_DEATH(ExtractWindow(Plane(3, 3), 0, 0, 4), "odd");
  EXPECT_DEATH(ExtractWindow(Plane(3, 3), 3, 0, 3), "out of bounds");
}

}  // namespace
}  // namespace salt_pepper
