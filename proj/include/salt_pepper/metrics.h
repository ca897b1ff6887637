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

#ifndef SALT_PEPPER_METRICS_H_
#define SALT_PEPPER_METRICS_H_

#include <cstdint>
#include <optional>

#include "absl/status/statusor.h"
#include "salt_pepper/image.h"

namespace salt_pepper {

// Color images are pooled: sums run over every channel sample and MSE divides
// by width * height * channels. Sums of squared differences are accumulated
// exactly in 64-bit integers.

// Sum over samples of (a - b)^2. Fails if shapes differ.
absl::StatusOr<uint64_t> SquaredErrorSum(const Image& a, const Image& b);

absl::StatusOr<double> Mse(const Image& original, const Image& restored);

// 10 * log10(255^2 / mse); +infinity when the images are identical.
double PsnrFromMse(double mse);
absl::StatusOr<double> PsnrDb(const Image& original, const Image& restored);

// Error energy of the noisy image divided by that of the restored one.
// +infinity when restored == original. FailedPrecondition when
// noisy == original (the ratio is undefined).
absl::StatusOr<double> Ief(const Image& original, const Image& restored,
                           const Image& noisy);

struct MetricsReport {
  double mse = 0.0;
  double psnr_db = 0.0;
  std::optional<double> ief;  // absent when no noisy image was supplied
};

// ief is computed only when `noisy` is non-null.
absl::StatusOr<MetricsReport> ComputeMetrics(const Image& original,
                                             const Image& restored,
                                             const Image* noisy = nullptr);

}  // namespace salt_pepper

#endif  // SALT_PEPPER_METRICS_H_
