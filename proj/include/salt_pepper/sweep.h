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

#ifndef SALT_PEPPER_SWEEP_H_
#define SALT_PEPPER_SWEEP_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "salt_pepper/filters.h"
#include "salt_pepper/image.h"

namespace salt_pepper {

inline constexpr std::string_view kCsvHeader =
    "image,filter,density,seed,mse,psnr_db,ief,runtime_ms";

struct SweepPlan {
  std::vector<std::string> inputs;
  std::vector<double> densities = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  std::vector<FilterKind> filters = {AllFilters().begin(), AllFilters().end()};
  std::vector<uint64_t> seeds = {1};
  std::string csv_path;
  FilterParams params;
  double salt_fraction = 0.5;
  int threads = 1;
};

// densities in (0,1], at least one filter/seed/input.
absl::Status ValidateSweepPlan(const SweepPlan& plan);

struct SweepRecord {
  std::string image;
  FilterKind filter = FilterKind::kPa;
  double density = 0.0;
  uint64_t seed = 0;
  double mse = 0.0;
  double psnr_db = 0.0;
  double ief = 0.0;
  double runtime_ms = 0.0;
};

struct NamedImage {
  std::string name;
  Image image;
};

// Noise is injected once per (image, density, seed) and the same noisy image
// is handed to every filter. Records come back ordered by image, density,
// seed, filter, as listed in the plan.
absl::StatusOr<std::vector<SweepRecord>> RunSweep(
    const SweepPlan& plan, std::span<const NamedImage> images);

// Loads every input (name = file stem) and runs the sweep. Fails before any
// filtering if an input cannot be read.
absl::StatusOr<std::vector<SweepRecord>> RunSweep(const SweepPlan& plan);

// Fixed 4-decimal formatting; infinities print as "inf".
std::string FormatNumber(double value);
std::string FormatCsv(std::span<const SweepRecord> records);

// Writes to a sibling temporary file and renames it over `path`, so a failed
// run never leaves a partial file behind.
absl::Status WriteFileAtomically(const std::string& path,
                                 std::string_view contents);

// key=value lines; '#' starts a comment; blank lines ignored. Repeated keys
// accumulate values in order.
absl::StatusOr<std::map<std::string, std::vector<std::string>>> ParseConfig(
    std::string_view text);

// Comma-separated lists.
absl::StatusOr<std::vector<double>> ParseDoubleList(std::string_view text);
absl::StatusOr<std::vector<uint64_t>> ParseSeedList(std::string_view text);
absl::StatusOr<std::vector<FilterKind>> ParseFilterList(std::string_view text);

}  // namespace salt_pepper

#endif  // SALT_PEPPER_SWEEP_H_
