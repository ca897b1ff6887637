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

#include "salt_pepper/synthetic.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "salt_pepper/noise.h"

namespace salt_pepper {
namespace {

constexpr int kLow = 16;
constexpr int kHigh = 239;

Intensity ClampToRange(double v) {
  return static_cast<Intensity>(
      std::clamp(static_cast<int>(std::lround(v)), kLow, kHigh));
}

class Uniform {
 public:
  explicit Uniform(uint64_t seed) : rng_(seed) {}
  double Next() { return SplitMix64::ToUnit(rng_.Next()); }
  double Next(double lo, double hi) { return lo + (hi - lo) * Next(); }

 private:
  SplitMix64 rng_;
};

// Bilinearly interpolated lattice noise with the given cell size, in [-1,1].
class ValueNoise {
 public:
  ValueNoise(int width, int height, int cell, Uniform& u)
      : cell_(cell), cols_(width / cell + 2), rows_(height / cell + 2) {
    lattice_.resize(static_cast<size_t>(cols_) * rows_);
    for (double& v : lattice_) v = u.Next(-1.0, 1.0);
  }

  double At(int y, int x) const {
    const double fy = static_cast<double>(y) / cell_;
    const double fx = static_cast<double>(x) / cell_;
    const int iy = static_cast<int>(fy);
    const int ix = static_cast<int>(fx);
    const double ty = Smooth(fy - iy);
    const double tx = Smooth(fx - ix);
    const double a = Lat(iy, ix) * (1 - tx) + Lat(iy, ix + 1) * tx;
    const double b = Lat(iy + 1, ix) * (1 - tx) + Lat(iy + 1, ix + 1) * tx;
    return a * (1 - ty) + b * ty;
  }

 private:
  static double Smooth(double t) { return t * t * (3 - 2 * t); }
  double Lat(int y, int x) const {
    return lattice_[static_cast<size_t>(y) * cols_ + x];
  }

  int cell_;
  int cols_;
  int rows_;
  std::vector<double> lattice_;
};

}  // namespace

Image MakeGradient(int width, int height, int channels) {
  Image img(width, height, channels);
  const double span = std::max(1, width + height - 2);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double t = (x + y) / span;
      for (int c = 0; c < channels; ++c) {
        const double tc = c == 1 ? 1.0 - t : t;
        img.at(y, x, c) = ClampToRange(kLow + tc * (kHigh - kLow));
      }
    }
  }
  return img;
}

Image MakeCheckerboard(int width, int height, int cell, int channels) {
  Image img(width, height, channels);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const bool dark = ((y / cell) + (x / cell)) % 2 == 0;
      for (int c = 0; c < channels; ++c) {
        img.at(y, x, c) =
            static_cast<Intensity>(dark ? 60 + 10 * c : 190 - 10 * c);
      }
    }
  }
  return img;
}

Image MakeDeadLeaves(int width, int height, int channels, uint64_t seed) {
  Uniform u(seed);
  std::vector<double> canvas(static_cast<size_t>(width) * height * channels);

  // Smooth background.
  {
    std::vector<ValueNoise> layers;
    for (int c = 0; c < channels; ++c) {
      layers.emplace_back(width, height, std::max(8, width / 4), u);
    }
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        for (int c = 0; c < channels; ++c) {
          canvas[(static_cast<size_t>(y) * width + x) * channels + c] =
              128.0 + 60.0 * layers[c].At(y, x);
        }
      }
    }
  }

  // Occluding disks, radius density ~ r^-3 between r_min and r_max.
  const double r_min = 3.0;
  const double r_max = std::max(r_min + 1.0, std::min(width, height) / 5.0);
  const int disks = std::max(8, width * height / 200);
  for (int i = 0; i < disks; ++i) {
    const double p = u.Next();
    const double inv2 = 1.0 / (r_min * r_min) -
                        p * (1.0 / (r_min * r_min) - 1.0 / (r_max * r_max));
    const double radius = 1.0 / std::sqrt(inv2);
    const double cy = u.Next(-radius, height + radius);
    const double cx = u.Next(-radius, width + radius);
    const double base = u.Next(40.0, 215.0);
    const double gy = u.Next(-0.6, 0.6);
    const double gx = u.Next(-0.6, 0.6);
    double tint[3];
    for (double& t : tint) t = u.Next(-25.0, 25.0);
    const int y0 = std::max(0, static_cast<int>(cy - radius));
    const int y1 = std::min(height - 1, static_cast<int>(cy + radius));
    const int x0 = std::max(0, static_cast<int>(cx - radius));
    const int x1 = std::min(width - 1, static_cast<int>(cx + radius));
    for (int y = y0; y <= y1; ++y) {
      for (int x = x0; x <= x1; ++x) {
        const double dy = y - cy;
        const double dx = x - cx;
        if (dy * dy + dx * dx > radius * radius) continue;
        for (int c = 0; c < channels; ++c) {
          canvas[(static_cast<size_t>(y) * width + x) * channels + c] =
              base + gy * dy + gx * dx + (channels == 3 ? tint[c] : 0.0);
        }
      }
    }
  }

  // Fine texture.
  ValueNoise grain(width, height, 2, u);
  Image img(width, height, channels);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double g = 4.0 * grain.At(y, x);
      for (int c = 0; c < channels; ++c) {
        img.at(y, x, c) = ClampToRange(
            canvas[(static_cast<size_t>(y) * width + x) * channels + c] + g);
      }
    }
  }
  return img;
}

}  // namespace salt_pepper
