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

#ifndef SALT_PEPPER_FILTERS_H_
#define SALT_PEPPER_FILTERS_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "salt_pepper/image.h"

namespace salt_pepper {

// All filters are non-recursive: every window is read from the input plane
// and results go to a fresh plane, so the output does not depend on the order
// (or the number of threads) in which pixels are processed.
//
// Windows near the border are truncated to in-bounds pixels. Where a rule
// compares a count against the window side, the nominal side is used.

enum class FilterKind { kMf, kAmf, kMdbutmf, kMdbptgmf, kAwmfApprox, kPa };

// Designators as used on the command line and in CSV output:
// "mf", "amf", "mdbutmf", "mdbptgmf", "awmf-approx", "pa".
std::string_view FilterName(FilterKind kind);
absl::StatusOr<FilterKind> ParseFilterName(std::string_view name);
std::span<const FilterKind> AllFilters();
// "mf, amf, mdbutmf, mdbptgmf, awmf-approx, pa"
std::string FilterNameList();

// Window schedule of the adaptive filter: start at side w_init, grow by h,
// stop at w_max.
struct FilterParams {
  int w_init = 3;
  int h = 2;
  int w_max = 9;
};

// w_init >= 3 and odd; h even and >= 2; w_max >= w_init, odd, and reachable
// from w_init in steps of h.
absl::Status ValidateFilterParams(const FilterParams& params);

struct RunOptions {
  int threads = 1;  // 0: one per hardware thread
};

// Adaptive trimmed filter. Pixels in [1,254] are copied. For a 0/255 pixel
// the window grows from w_init until it holds at least `side` uncorrupted
// values, which are then replaced by their median. If w_max is reached
// without that, the fallback is, in order: mean of the uncorrupted values;
// mean of the whole window when it mixes 0s and 255s; 255 for an all-0
// window; 0 for an all-255 window.
Plane FilterPa(const Plane& plane, const FilterParams& params = {},
               const RunOptions& run = {});

enum class PaOutcome {
  kUnchanged,    // pixel already in [1,254]
  kMedianClean,  // N >= W at some side
  kMeanClean,    // w_max reached, 0 < N < W
  kMeanWindow,   // w_max reached, window holds only 0s and 255s, both
  kSalt,         // w_max reached, window all 0
  kPepper,       // w_max reached, window all 255
};

std::string_view PaOutcomeName(PaOutcome outcome);

struct PaStep {
  int side = 0;
  int clean_count = 0;
};

// Decision record for one pixel of FilterPa: one step per extraction.
struct PaTrace {
  std::vector<PaStep> steps;
  PaOutcome outcome = PaOutcome::kUnchanged;
  Intensity output = 0;
};

PaTrace TracePaPixel(const Plane& plane, int row, int col,
                     const FilterParams& params = {});

// Fixed 3x3 decision-based partially trimmed filter. For 0/255 pixels: all-0
// window -> 255, all-255 window -> 0, window of only 0s and 255s -> window
// mean, otherwise median of the uncorrupted values.
Plane FilterMdbptgmf(const Plane& plane, const RunOptions& run = {});

// Fixed 3x3 unsymmetric trimmed median. For 0/255 pixels: window of only 0s
// and 255s -> window mean, otherwise median of the uncorrupted values.
Plane FilterMdbutmf(const Plane& plane, const RunOptions& run = {});

// Plain median over a side x side window, applied to every pixel.
Plane FilterMf(const Plane& plane, int side = 3, const RunOptions& run = {});

// Two-level adaptive median filter (Hwang & Haddad). The window grows from 3
// while its median equals its min or max; once it does not, the pixel is kept
// if it lies strictly between min and max and replaced by the median
// otherwise. If the window passes w_max first the pixel is kept.
Plane FilterAmf(const Plane& plane, int w_max = 9, const RunOptions& run = {});

// Approximation of the adaptive weighted mean filter with uniform weights.
// The window grows from 3 until its min and max equal those of the next
// larger window (or w_max is reached). A pixel equal to the window min or max
// is replaced by the mean of the window's values in [1,254]; if there are
// none, or the pixel is strictly inside (min, max), it is kept.
Plane FilterAwmf(const Plane& plane, int w_max = 9, const RunOptions& run = {});

// A filter plus its parameters. `params` drives the adaptive filter
// directly; the comparators read what applies to them: mf uses w_init as its
// side, amf and awmf-approx use w_max as their largest side.
struct FilterSpec {
  FilterKind kind = FilterKind::kPa;
  FilterParams params;
};

absl::Status ValidateFilterSpec(const FilterSpec& spec);

Plane ApplyToPlane(const FilterSpec& spec, const Plane& plane,
                   const RunOptions& run = {});

// Splits into channels, filters each independently, merges.
absl::StatusOr<Image> ApplyToImage(const FilterSpec& spec, const Image& img,
                                   const RunOptions& run = {});

}  // namespace salt_pepper

#endif  // SALT_PEPPER_FILTERS_H_
