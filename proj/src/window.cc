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

#include <algorithm>
#include <numeric>

#include "check.h"

namespace salt_pepper {

WindowView ExtractWindow(const Plane& plane, int row, int col, int side) {
  SP_CHECK(side >= 1 && side % 2 == 1, "window side must be odd");
  SP_CHECK(row >= 0 && row < plane.height() && col >= 0 && col < plane.width(),
           "window center out of bounds");
  const int r = side / 2;
  WindowView w;
  w.row = row;
  w.col = col;
  w.side = side;
  w.center = plane.at(row, col);
  const int r0 = std::max(0, row - r);
  const int r1 = std::min(plane.height() - 1, row + r);
  const int c0 = std::max(0, col - r);
  const int c1 = std::min(plane.width() - 1, col + r);
  w.values.reserve(static_cast<size_t>(r1 - r0 + 1) * (c1 - c0 + 1));
  for (int y = r0; y <= r1; ++y) {
    const auto src = plane.row(y);
    for (int x = c0; x <= c1; ++x) {
      w.values.push_back(src[x]);
      if (!IsImpulse(src[x])) w.clean_values.push_back(src[x]);
    }
  }
  std::sort(w.clean_values.begin(), w.clean_values.end());
  return w;
}

Intensity MedianOfSorted(std::span<const Intensity> sorted) {
  SP_CHECK(!sorted.empty(), "median of empty sequence");
  const size_t n = sorted.size();
  if (n % 2 == 1) return sorted[n / 2];
  return RoundedMean(uint64_t{sorted[n / 2 - 1]} + sorted[n / 2], 2);
}

Intensity MedianInt(std::span<const Intensity> values) {
  SP_CHECK(!values.empty(), "median of empty sequence");
  std::vector<Intensity> copy(values.begin(), values.end());
  std::sort(copy.begin(), copy.end());
  return MedianOfSorted(copy);
}

Intensity MeanInt(std::span<const Intensity> values) {
  SP_CHECK(!values.empty(), "mean of empty sequence");
  const uint64_t sum =
      std::accumulate(values.begin(), values.end(), uint64_t{0});
  return RoundedMean(sum, values.size());
}

}  // namespace salt_pepper
