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

#ifndef SALT_PEPPER_IMAGE_H_
#define SALT_PEPPER_IMAGE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace salt_pepper {

using Intensity = uint8_t;

inline constexpr Intensity kPepper = 0;
inline constexpr Intensity kSalt = 255;

// True for the two fixed impulse values. Everything in [1,254] is treated as
// uncorrupted by the decision-based filters.
constexpr bool IsImpulse(Intensity v) { return v == kPepper || v == kSalt; }

// Single-channel raster, row-major. The unit every filter operates on.
class Plane {
 public:
  Plane() = default;
  Plane(int width, int height, Intensity fill = 0);
  Plane(int width, int height, std::vector<Intensity> data);

  int width() const { return width_; }
  int height() const { return height_; }
  size_t size() const { return data_.size(); }

  Intensity at(int row, int col) const {
    return data_[static_cast<size_t>(row) * width_ + col];
  }
  Intensity& at(int row, int col) {
    return data_[static_cast<size_t>(row) * width_ + col];
  }
  std::span<const Intensity> row(int r) const {
    return std::span<const Intensity>(data_).subspan(
        static_cast<size_t>(r) * width_, width_);
  }
  std::span<Intensity> row(int r) {
    return std::span<Intensity>(data_).subspan(static_cast<size_t>(r) * width_,
                                               width_);
  }
  std::span<const Intensity> data() const { return data_; }
  std::span<Intensity> data() { return data_; }

  friend bool operator==(const Plane&, const Plane&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<Intensity> data_;
};

// width x height x channels raster, channel-interleaved (RGBRGB...).
// channels is 1 (grayscale) or 3 (RGB).
class Image {
 public:
  Image() = default;
  Image(int width, int height, int channels, Intensity fill = 0);
  Image(int width, int height, int channels, std::vector<Intensity> data);

  int width() const { return width_; }
  int height() const { return height_; }
  int channels() const { return channels_; }
  size_t sample_count() const { return data_.size(); }

  Intensity at(int row, int col, int channel = 0) const {
    return data_[(static_cast<size_t>(row) * width_ + col) * channels_ +
                 channel];
  }
  Intensity& at(int row, int col, int channel = 0) {
    return data_[(static_cast<size_t>(row) * width_ + col) * channels_ +
                 channel];
  }
  std::span<const Intensity> data() const { return data_; }
  std::span<Intensity> data() { return data_; }

  bool SameShape(const Image& other) const {
    return width_ == other.width_ && height_ == other.height_ &&
           channels_ == other.channels_;
  }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  int channels_ = 0;
  std::vector<Intensity> data_;
};

// Parses binary PGM (P5) or PPM (P6) with maxval 255. '#' comments are
// accepted anywhere whitespace is allowed in the header. Errors carry the
// byte offset at which parsing failed.
absl::StatusOr<Image> LoadPnm(std::span<const uint8_t> bytes);

// Canonical encoding: "P5" or "P6", "\n", "<w> <h>\n", "255\n", raw samples.
std::vector<uint8_t> SavePnm(const Image& img);

absl::StatusOr<Image> ReadPnmFile(const std::string& path);
absl::Status WritePnmFile(const std::string& path, const Image& img);

std::vector<Plane> SplitChannels(const Image& img);
absl::StatusOr<Image> MergeChannels(std::span<const Plane> planes);

Plane ToPlane(const Image& gray);

}  // namespace salt_pepper

#endif  // SALT_PEPPER_IMAGE_H_
