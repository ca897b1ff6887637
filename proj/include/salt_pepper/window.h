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

#ifndef SALT_PEPPER_WINDOW_H_
#define SALT_PEPPER_WINDOW_H_

#include <span>
#include <vector>

#include "salt_pepper/image.h"

namespace salt_pepper {

// One square neighbourhood of a plane. Windows are truncated at the plane
// border: out-of-bounds positions are simply absent from `values`, while
// `side` keeps the nominal length.
struct WindowView {
  int row = 0;
  int col = 0;
  int side = 0;
  Intensity center = 0;
  std::vector<Intensity> values;        // in-bounds samples, row-major
  std::vector<Intensity> clean_values;  // sorted, 0 and 255 removed

  int clean_count() const { return static_cast<int>(clean_values.size()); }
};

// `side` must be odd and positive; (row, col) must lie inside the plane.
WindowView ExtractWindow(const Plane& plane, int row, int col, int side);

// Median with the even-count rule: mean of the two middle elements, rounded
// half up. Aborts on empty input.
Intensity MedianInt(std::span<const Intensity> values);

// Median of values already sorted ascending. Aborts on empty input.
Intensity MedianOfSorted(std::span<const Intensity> sorted);

// Arithmetic mean rounded half up. Aborts on empty input.
Intensity MeanInt(std::span<const Intensity> values);

// Rounds sum / count half up. count > 0, sum >= 0.
constexpr Intensity RoundedMean(uint64_t sum, uint64_t count) {
  return static_cast<Intensity>((2 * sum + count) / (2 * count));
}

}  // namespace salt_pepper

#endif  // SALT_PEPPER_WINDOW_H_
