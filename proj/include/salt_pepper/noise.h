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

#ifndef SALT_PEPPER_NOISE_H_
#define SALT_PEPPER_NOISE_H_

#include <cstdint>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "salt_pepper/image.h"

namespace salt_pepper {

// SplitMix64 (Steele, Lea & Flood 2014). The state after k steps is
// seed + k * kGamma, so any position of the stream can be computed directly;
// that is what lets noise injection be split across threads without changing
// its output.
class SplitMix64 {
 public:
  static constexpr uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t Next() {
    state_ += kGamma;
    return Mix(state_);
  }

  // Value returned by the (index+1)-th call to Next() on a fresh generator.
  static uint64_t At(uint64_t seed, uint64_t index) {
    return Mix(seed + (index + 1) * kGamma);
  }

  // Uniform double in [0,1) from the top 53 bits.
  static double ToUnit(uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
  }

  static uint64_t Mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  uint64_t state_;
};

struct NoiseSpec {
  double density = 0.0;        // P(sample corrupted), in [0,1]
  double salt_fraction = 0.5;  // P(corrupted sample becomes 255), in [0,1]
  uint64_t seed = 1;
};

absl::Status ValidateNoiseSpec(const NoiseSpec& spec);

// Sample i (row-major, channel-interleaved) consumes stream draws 2i and
// 2i+1: the first decides corruption (u < density), the second salt versus
// pepper (u < salt_fraction). Both draws are consumed whether or not the
// sample is corrupted, so the corruption sets at two densities under the same
// seed are nested.
//
// The spec must satisfy ValidateNoiseSpec.
Image Inject(const Image& img, const NoiseSpec& spec);

// Fraction of samples where noisy is 0 or 255 and differs from original.
absl::StatusOr<double> CorruptionRate(const Image& original,
                                      const Image& noisy);

}  // namespace salt_pepper

#endif  // SALT_PEPPER_NOISE_H_
