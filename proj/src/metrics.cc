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

#include "salt_pepper/metrics.h"

#include <cmath>
#include <limits>

#include "absl/strings/str_cat.h"

namespace salt_pepper {
namespace {

absl::Status ShapeMismatch(const Image& a, const Image& b) {
  return absl::InvalidArgumentError(absl::StrCat(
      "image shapes differ: ", a.width(), "x", a.height(), "x", a.channels(),
      " vs ", b.width(), "x", b.height(), "x", b.channels()));
}

}  // namespace

absl::StatusOr<uint64_t> SquaredErrorSum(const Image& a, const Image& b) {
  if (!a.SameShape(b)) return ShapeMismatch(a, b);
  const auto x = a.data();
  const auto y = b.data();
  uint64_t sum = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    const int64_t d = int64_t{x[i]} - int64_t{y[i]};
    sum += static_cast<uint64_t>(d * d);
  }
  return sum;
}

absl::StatusOr<double> Mse(const Image& original, const Image& restored) {
  absl::StatusOr<uint64_t> sum = SquaredErrorSum(original, restored);
  if (!sum.ok()) return sum.status();
  return static_cast<double>(*sum) /
         static_cast<double>(original.sample_count());
}

double PsnrFromMse(double mse) {
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

absl::StatusOr<double> PsnrDb(const Image& original, const Image& restored) {
  absl::StatusOr<double> mse = Mse(original, restored);
  if (!mse.ok()) return mse.status();
  return PsnrFromMse(*mse);
}

absl::StatusOr<double> Ief(const Image& original, const Image& restored,
                           const Image& noisy) {
  absl::StatusOr<uint64_t> noise_energy = SquaredErrorSum(noisy, original);
  if (!noise_energy.ok()) return noise_energy.status();
  absl::StatusOr<uint64_t> residual = SquaredErrorSum(restored, original);
  if (!residual.ok()) return residual.status();
  if (*noise_energy == 0) {
    return absl::FailedPreconditionError(
        "IEF undefined: noisy image equals original");
  }
  if (*residual == 0) return std::numeric_limits<double>::infinity();
  return static_cast<double>(*noise_energy) / static_cast<double>(*residual);
}

absl::StatusOr<MetricsReport> ComputeMetrics(const Image& original,
                                             const Image& restored,
                                             const Image* noisy) {
  MetricsReport report;
  absl::StatusOr<double> mse = Mse(original, restored);
  if (!mse.ok()) return mse.status();
  report.mse = *mse;
  report.psnr_db = PsnrFromMse(*mse);
  if (noisy != nullptr) {
    absl::StatusOr<double> ief = Ief(original, restored, *noisy);
    if (!ief.ok()) return ief.status();
    report.ief = *ief;
  }
  return report;
}

}  // namespace salt_pepper
