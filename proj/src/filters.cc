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

#include "salt_pepper/filters.h"

#include <algorithm>
#include <array>
#include <cstdint>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "check.h"
#include "salt_pepper/parallel.h"
#include "salt_pepper/window.h"

namespace salt_pepper {
namespace {

constexpr std::array<FilterKind, 6> kAllFilters = {
    FilterKind::kMf,       FilterKind::kAmf,        FilterKind::kMdbutmf,
    FilterKind::kMdbptgmf, FilterKind::kAwmfApprox, FilterKind::kPa,
};

// Inclusive bounds of a (possibly truncated) square window.
struct Box {
  int r0, r1, c0, c1;

  static Box Around(const Plane& p, int row, int col, int radius) {
    return {std::max(0, row - radius), std::min(p.height() - 1, row + radius),
            std::max(0, col - radius), std::min(p.width() - 1, col + radius)};
  }
  bool Contains(int r, int c) const {
    return r >= r0 && r <= r1 && c >= c0 && c <= c1;
  }
};

// Median of an unsorted buffer, reordering it. Same rounding rule as
// MedianOfSorted.
Intensity MedianInPlace(std::span<Intensity> v) {
  SP_CHECK(!v.empty(), "median of empty sequence");
  const size_t n = v.size();
  auto mid = v.begin() + n / 2;
  std::nth_element(v.begin(), mid, v.end());
  if (n % 2 == 1) return *mid;
  const Intensity lower = *std::max_element(v.begin(), mid);
  return RoundedMean(uint64_t{lower} + *mid, 2);
}

// Census of impulse values in a window.
struct ImpulseCount {
  int zeros = 0;
  int salts = 0;
  int total = 0;

  void Add(Intensity v) {
    zeros += v == kPepper;
    salts += v == kSalt;
    ++total;
  }
};

// Rows of output are independent; run `fn(row)` for every row.
template <typename RowFn>
void ForEachRow(const Plane& plane, const RunOptions& run, RowFn fn) {
  ParallelForRows(plane.height(), run.threads, [&](int begin, int end) {
    for (int r = begin; r < end; ++r) fn(r);
  });
}

// Per-worker buffers for the adaptive filter.
struct PaScratch {
  std::vector<Intensity> clean;
};

// Resolves one pixel of the adaptive filter. The window is grown by adding
// only the ring between the previous and the new box.
template <bool kTrace>
Intensity ResolvePa(const Plane& plane, int row, int col,
                    const FilterParams& params, PaScratch& scratch,
                    PaTrace* trace) {
  const Intensity center = plane.at(row, col);
  if (!IsImpulse(center)) {
    if constexpr (kTrace) trace->outcome = PaOutcome::kUnchanged;
    return center;
  }
  std::vector<Intensity>& clean = scratch.clean;
  clean.clear();
  ImpulseCount impulses;
  auto add = [&](Intensity v) {
    if (IsImpulse(v)) {
      impulses.Add(v);
    } else {
      clean.push_back(v);
      ++impulses.total;
    }
  };

  int side = params.w_init;
  Box box = Box::Around(plane, row, col, side / 2);
  for (int r = box.r0; r <= box.r1; ++r) {
    const auto src = plane.row(r);
    for (int c = box.c0; c <= box.c1; ++c) add(src[c]);
  }

  PaOutcome outcome;
  Intensity result;
  while (true) {
    const int n = static_cast<int>(clean.size());
    if constexpr (kTrace) trace->steps.push_back({side, n});
    if (n >= side) {
      outcome = PaOutcome::kMedianClean;
      result = MedianInPlace(clean);
      break;
    }
    if (side >= params.w_max) {
      if (n > 0) {
        outcome = PaOutcome::kMeanClean;
        result = MeanInt(clean);
      } else if (impulses.zeros > 0 && impulses.salts > 0) {
        outcome = PaOutcome::kMeanWindow;
        result = RoundedMean(uint64_t{kSalt} * impulses.salts, impulses.total);
      } else if (impulses.salts == 0) {
        outcome = PaOutcome::kSalt;
        result = kSalt;
      } else {
        outcome = PaOutcome::kPepper;
        result = kPepper;
      }
      break;
    }
    side += params.h;
    const Box grown = Box::Around(plane, row, col, side / 2);
    for (int r = grown.r0; r <= grown.r1; ++r) {
      const auto src = plane.row(r);
      if (r < box.r0 || r > box.r1) {
        for (int c = grown.c0; c <= grown.c1; ++c) add(src[c]);
      } else {
        for (int c = grown.c0; c < box.c0; ++c) add(src[c]);
        for (int c = box.c1 + 1; c <= grown.c1; ++c) add(src[c]);
      }
    }
    box = grown;
  }
  if constexpr (kTrace) {
    trace->outcome = outcome;
    trace->output = result;
  }
  return result;
}

// Shared body of the two fixed-3x3 decision-based filters. `all_zero` and
// `all_salt` give the replacement for single-valued impulse windows; a
// negative value means "use the window mean".
template <int kAllZero, int kAllSalt>
Plane FilterTrimmed3x3(const Plane& plane, const RunOptions& run) {
  Plane out = plane;
  ForEachRow(plane, run, [&](int row) {
    std::array<Intensity, 9> clean;
    auto dst = out.row(row);
    const auto src = plane.row(row);
    for (int col = 0; col < plane.width(); ++col) {
      if (!IsImpulse(src[col])) continue;
      const Box box = Box::Around(plane, row, col, 1);
      ImpulseCount impulses;
      int n = 0;
      for (int r = box.r0; r <= box.r1; ++r) {
        const auto win = plane.row(r);
        for (int c = box.c0; c <= box.c1; ++c) {
          if (IsImpulse(win[c])) {
            impulses.Add(win[c]);
          } else {
            clean[n++] = win[c];
            ++impulses.total;
          }
        }
      }
      if (n > 0) {
        dst[col] = MedianInPlace(std::span(clean.data(), n));
      } else if (impulses.salts == 0 && kAllZero >= 0) {
        dst[col] = static_cast<Intensity>(kAllZero);
      } else if (impulses.zeros == 0 && kAllSalt >= 0) {
        dst[col] = static_cast<Intensity>(kAllSalt);
      } else {
        dst[col] =
            RoundedMean(uint64_t{kSalt} * impulses.salts, impulses.total);
      }
    }
  });
  return out;
}

}  // namespace

std::string_view FilterName(FilterKind kind) {
  switch (kind) {
    case FilterKind::kMf:
      return "mf";
    case FilterKind::kAmf:
      return "amf";
    case FilterKind::kMdbutmf:
      return "mdbutmf";
    case FilterKind::kMdbptgmf:
      return "mdbptgmf";
    case FilterKind::kAwmfApprox:
      return "awmf-approx";
    case FilterKind::kPa:
      return "pa";
  }
  return "?";
}

std::span<const FilterKind> AllFilters() { return kAllFilters; }

std::string FilterNameList() {
  return absl::StrJoin(kAllFilters, ", ", [](std::string* out, FilterKind k) {
    out->append(FilterName(k));
  });
}

absl::StatusOr<FilterKind> ParseFilterName(std::string_view name) {
  for (FilterKind k : kAllFilters) {
    if (FilterName(k) == name) return k;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown filter '", std::string(name),
                   "'; valid filters: ", FilterNameList()));
}

absl::Status ValidateFilterParams(const FilterParams& p) {
  if (p.w_init < 3 || p.w_init % 2 == 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("w_init must be odd and >= 3, got ", p.w_init));
  }
  if (p.h < 2 || p.h % 2 != 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("h must be even and >= 2, got ", p.h));
  }
  if (p.w_max < p.w_init || p.w_max % 2 == 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("w_max must be odd and >= w_init, got ", p.w_max));
  }
  if ((p.w_max - p.w_init) % p.h != 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("w_max - w_init must be a multiple of h (", p.w_max, " - ",
                     p.w_init, " vs ", p.h, ")"));
  }
  return absl::OkStatus();
}

std::string_view PaOutcomeName(PaOutcome outcome) {
  switch (outcome) {
    case PaOutcome::kUnchanged:
      return "unchanged";
    case PaOutcome::kMedianClean:
      return "median-clean";
    case PaOutcome::kMeanClean:
      return "mean-clean";
    case PaOutcome::kMeanWindow:
      return "mean-window";
    case PaOutcome::kSalt:
      return "salt";
    case PaOutcome::kPepper:
      return "pepper";
  }
  return "?";
}

Plane FilterPa(const Plane& plane, const FilterParams& params,
               const RunOptions& run) {
  SP_CHECK(ValidateFilterParams(params).ok(), "invalid filter params");
  Plane out = plane;
  ForEachRow(plane, run, [&](int row) {
    thread_local PaScratch scratch;
    auto dst = out.row(row);
    const auto src = plane.row(row);
    for (int col = 0; col < plane.width(); ++col) {
      if (!IsImpulse(src[col])) continue;
      dst[col] = ResolvePa<false>(plane, row, col, params, scratch, nullptr);
    }
  });
  return out;
}

PaTrace TracePaPixel(const Plane& plane, int row, int col,
                     const FilterParams& params) {
  SP_CHECK(ValidateFilterParams(params).ok(), "invalid filter params");
  SP_CHECK(row >= 0 && row < plane.height() && col >= 0 && col < plane.width(),
           "trace position out of bounds");
  PaScratch scratch;
  PaTrace trace;
  trace.output = ResolvePa<true>(plane, row, col, params, scratch, &trace);
  return trace;
}

Plane FilterMdbptgmf(const Plane& plane, const RunOptions& run) {
  return FilterTrimmed3x3<kSalt, kPepper>(plane, run);
}

Plane FilterMdbutmf(const Plane& plane, const RunOptions& run) {
  return FilterTrimmed3x3<-1, -1>(plane, run);
}

Plane FilterMf(const Plane& plane, int side, const RunOptions& run) {
  SP_CHECK(side >= 1 && side % 2 == 1, "median side must be odd");
  Plane out(plane.width(), plane.height());
  ForEachRow(plane, run, [&](int row) {
    std::vector<Intensity> buf;
    buf.reserve(static_cast<size_t>(side) * side);
    auto dst = out.row(row);
    for (int col = 0; col < plane.width(); ++col) {
      const Box box = Box::Around(plane, row, col, side / 2);
      buf.clear();
      for (int r = box.r0; r <= box.r1; ++r) {
        const auto win = plane.row(r);
        buf.insert(buf.end(), win.begin() + box.c0, win.begin() + box.c1 + 1);
      }
      dst[col] = MedianInPlace(buf);
    }
  });
  return out;
}

Plane FilterAmf(const Plane& plane, int w_max, const RunOptions& run) {
  SP_CHECK(w_max >= 3 && w_max % 2 == 1, "amf w_max must be odd and >= 3");
  Plane out(plane.width(), plane.height());
  ForEachRow(plane, run, [&](int row) {
    std::vector<Intensity> buf;
    buf.reserve(static_cast<size_t>(w_max) * w_max);
    auto dst = out.row(row);
    for (int col = 0; col < plane.width(); ++col) {
      const Intensity z = plane.at(row, col);
      Intensity result = z;
      for (int side = 3; side <= w_max; side += 2) {
        const Box box = Box::Around(plane, row, col, side / 2);
        buf.clear();
        for (int r = box.r0; r <= box.r1; ++r) {
          const auto win = plane.row(r);
          buf.insert(buf.end(), win.begin() + box.c0, win.begin() + box.c1 + 1);
        }
        const auto [lo, hi] = std::minmax_element(buf.begin(), buf.end());
        const Intensity zmin = *lo;
        const Intensity zmax = *hi;
        const Intensity zmed = MedianInPlace(buf);
        if (zmin < zmed && zmed < zmax) {
          result = (zmin < z && z < zmax) ? z : zmed;
          break;
        }
      }
      dst[col] = result;
    }
  });
  return out;
}

Plane FilterAwmf(const Plane& plane, int w_max, const RunOptions& run) {
  SP_CHECK(w_max >= 3 && w_max % 2 == 1, "awmf w_max must be odd and >= 3");
  Plane out = plane;
  ForEachRow(plane, run, [&](int row) {
    auto dst = out.row(row);
    for (int col = 0; col < plane.width(); ++col) {
      auto extremes = [&](int side) {
        const Box box = Box::Around(plane, row, col, side / 2);
        Intensity lo = 255, hi = 0;
        for (int r = box.r0; r <= box.r1; ++r) {
          const auto win = plane.row(r);
          for (int c = box.c0; c <= box.c1; ++c) {
            lo = std::min(lo, win[c]);
            hi = std::max(hi, win[c]);
          }
        }
        return std::pair{lo, hi};
      };
      int side = 3;
      auto current = extremes(side);
      while (side + 2 <= w_max) {
        const auto next = extremes(side + 2);
        if (next == current) break;
        side += 2;
        current = next;
      }
      const Intensity z = plane.at(row, col);
      if (z != current.first && z != current.second) continue;
      const Box box = Box::Around(plane, row, col, side / 2);
      uint64_t sum = 0;
      uint64_t n = 0;
      for (int r = box.r0; r <= box.r1; ++r) {
        const auto win = plane.row(r);
        for (int c = box.c0; c <= box.c1; ++c) {
          if (!IsImpulse(win[c])) {
            sum += win[c];
            ++n;
          }
        }
      }
      if (n > 0) dst[col] = RoundedMean(sum, n);
    }
  });
  return out;
}

absl::Status ValidateFilterSpec(const FilterSpec& spec) {
  const FilterParams& p = spec.params;
  switch (spec.kind) {
    case FilterKind::kPa:
      return ValidateFilterParams(p);
    case FilterKind::kMf:
      if (p.w_init < 3 || p.w_init % 2 == 0) {
        return absl::InvalidArgumentError(absl::StrCat(
            "mf side (w_init) must be odd and >= 3, got ", p.w_init));
      }
      return absl::OkStatus();
    case FilterKind::kAmf:
    case FilterKind::kAwmfApprox:
      if (p.w_max < 3 || p.w_max % 2 == 0) {
        return absl::InvalidArgumentError(
            absl::StrCat(std::string(FilterName(spec.kind)),
                         " w_max must be odd and >= 3, got ", p.w_max));
      }
      return absl::OkStatus();
    case FilterKind::kMdbutmf:
    case FilterKind::kMdbptgmf:
      return absl::OkStatus();
  }
  return absl::InvalidArgumentError("unknown filter kind");
}

Plane ApplyToPlane(const FilterSpec& spec, const Plane& plane,
                   const RunOptions& run) {
  switch (spec.kind) {
    case FilterKind::kMf:
      return FilterMf(plane, spec.params.w_init, run);
    case FilterKind::kAmf:
      return FilterAmf(plane, spec.params.w_max, run);
    case FilterKind::kMdbutmf:
      return FilterMdbutmf(plane, run);
    case FilterKind::kMdbptgmf:
      return FilterMdbptgmf(plane, run);
    case FilterKind::kAwmfApprox:
      return FilterAwmf(plane, spec.params.w_max, run);
    case FilterKind::kPa:
      return FilterPa(plane, spec.params, run);
  }
  SP_CHECK(false, "unknown filter kind");
  return plane;
}

absl::StatusOr<Image> ApplyToImage(const FilterSpec& spec, const Image& img,
                                   const RunOptions& run) {
  if (absl::Status s = ValidateFilterSpec(spec); !s.ok()) return s;
  std::vector<Plane> planes = SplitChannels(img);
  for (Plane& p : planes) p = ApplyToPlane(spec, p, run);
  return MergeChannels(planes);
}

}  // namespace salt_pepper
