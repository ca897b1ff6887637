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

#ifndef SALT_PEPPER_SYNTHETIC_H_
#define SALT_PEPPER_SYNTHETIC_H_

#include <cstdint>

#include "salt_pepper/image.h"

namespace salt_pepper {

// Deterministic test images. Every generator keeps intensities inside
// [16, 239] so no clean pixel is mistaken for an impulse.

// Diagonal ramp.
Image MakeGradient(int width, int height, int channels);

// Alternating cells of two mid-range intensities.
Image MakeCheckerboard(int width, int height, int cell, int channels);

// Dead-leaves image: occluding disks with power-law radii over a smooth
// background, plus fine texture. Reproduces the edge and scale statistics of
// natural photographs well enough for filter comparisons.
Image MakeDeadLeaves(int width, int height, int channels, uint64_t seed);

}  // namespace salt_pepper

#endif  // SALT_PEPPER_SYNTHETIC_H_
