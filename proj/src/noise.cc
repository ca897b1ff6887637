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

#include "salt_pepper/noise.h"

#include "absl/strings/str_cat.h"
#include "check.h"

namespace salt_pepper {

absl::Status ValidateNoiseSpec(const NoiseSpec& spec) {
  // Negated comparisons so NaN is rejected too.
  if (!(spec.density >= 0.0 && spec.density <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("density must be in [0,1], got ", spec.density));
  }
  if (!(spec.salt_fraction >= 0.0 && spec.salt_fraction <= 1.0)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "salt fraction must be in [0,1], got ", spec.salt_fraction));
  }
  return absl::OkStatus();
}

Image Inject(const Image& img, const NoiseSpec& spec) {
  SP_CHECK(ValidateNoiseSpec(spec).ok(), "invalid noise spec");
  Image out = img;
  auto samples = out.data();
  SplitMix64 rng(spec.seed);
  for (Intensity& v : samples) {
    const double corrupt = SplitMix64::ToUnit(rng.Next());
    const double salt = SplitMix64::ToUnit(rng.Next());
    if (corrupt < spec.density) v = salt < spec.salt_fraction ? kSalt : kPepper;
  }
  return out;
}

absl::StatusOr<double> CorruptionRate(const Image& original,
                                      const Image& noisy) {
  if (!original.SameShape(noisy)) {
    return absl::InvalidArgumentError("corruption rate: image shapes differ");
  }
  const auto a = original.data();
  const auto b = noisy.data();
  size_t corrupted = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (IsImpulse(b[i]) && b[i] != a[i]) ++corrupted;
  }
  return static_cast<double>(corrupted) / static_cast<double>(a.size());
}

}  // namespace salt_pepper
