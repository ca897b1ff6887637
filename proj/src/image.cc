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

#include "salt_pepper/image.h"

#include <cctype>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>

#include "absl/strings/str_cat.h"
#include "check.h"

namespace salt_pepper {
namespace {

bool ValidDims(int width, int height, int channels) {
  return width >= 1 && height >= 1 && (channels == 1 || channels == 3);
}

// Cursor over a PNM header. Whitespace and '#'-to-end-of-line comments are
// skipped between tokens.
class HeaderReader {
 public:
  explicit HeaderReader(std::span<const uint8_t> bytes) : bytes_(bytes) {}

  size_t offset() const { return pos_; }

  absl::Status SkipSeparators() {
    bool any = false;
    while (pos_ < bytes_.size()) {
      const uint8_t c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' &&
               bytes_[pos_] != '\r') {
          ++pos_;
        }
        any = true;
      } else if (std::isspace(c)) {
        ++pos_;
        any = true;
      } else {
        break;
      }
    }
    if (!any) return Error("expected whitespace");
    return absl::OkStatus();
  }

  absl::StatusOr<int> ReadUnsigned(const char* what) {
    const size_t start = pos_;
    int64_t value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) {
        return absl::InvalidArgumentError(absl::StrCat(
            "PNM parse error at byte ", start, ": ", what, " out of range"));
      }
      ++pos_;
    }
    if (pos_ == start) {
      return Error(absl::StrCat("expected ", what));
    }
    return static_cast<int>(value);
  }

  absl::Status Error(absl::string_view what) const {
    return absl::InvalidArgumentError(
        absl::StrCat("PNM parse error at byte ", pos_, ": ", what));
  }

  void Advance() { ++pos_; }
  bool AtEnd() const { return pos_ >= bytes_.size(); }
  uint8_t Peek() const { return bytes_[pos_]; }

 private:
  std::span<const uint8_t> bytes_;
  size_t pos_ = 0;
};

}  // namespace

Plane::Plane(int width, int height, Intensity fill)
    : width_(width),
      height_(height),
      data_(static_cast<size_t>(width) * height, fill) {
  SP_CHECK(width >= 1 && height >= 1, "plane dimensions must be positive");
}

Plane::Plane(int width, int height, std::vector<Intensity> data)
    : width_(width), height_(height), data_(std::move(data)) {
  SP_CHECK(width >= 1 && height >= 1, "plane dimensions must be positive");
  SP_CHECK(data_.size() == static_cast<size_t>(width) * height,
           "plane data length must equal width * height");
}

Image::Image(int width, int height, int channels, Intensity fill)
    : width_(width),
      height_(height),
      channels_(channels),
      data_(static_cast<size_t>(width) * height * channels, fill) {
  SP_CHECK(ValidDims(width, height, channels), "invalid image dimensions");
}

Image::Image(int width, int height, int channels, std::vector<Intensity> data)
    : width_(width),
      height_(height),
      channels_(channels),
      data_(std::move(data)) {
  SP_CHECK(ValidDims(width, height, channels), "invalid image dimensions");
  SP_CHECK(data_.size() == static_cast<size_t>(width) * height * channels,
           "image data length must equal width * height * channels");
}

absl::StatusOr<Image> LoadPnm(std::span<const uint8_t> bytes) {
  HeaderReader in(bytes);
  if (bytes.size() < 2 || bytes[0] != 'P' ||
      (bytes[1] != '5' && bytes[1] != '6')) {
    return in.Error("expected magic P5 or P6");
  }
  const int channels = bytes[1] == '5' ? 1 : 3;
  in.Advance();
  in.Advance();

  if (auto s = in.SkipSeparators(); !s.ok()) return s;
  absl::StatusOr<int> width = in.ReadUnsigned("width");
  if (!width.ok()) return width.status();
  if (auto s = in.SkipSeparators(); !s.ok()) return s;
  absl::StatusOr<int> height = in.ReadUnsigned("height");
  if (!height.ok()) return height.status();
  if (auto s = in.SkipSeparators(); !s.ok()) return s;
  const size_t maxval_offset = in.offset();
  absl::StatusOr<int> maxval = in.ReadUnsigned("maxval");
  if (!maxval.ok()) return maxval.status();

  if (*width < 1 || *height < 1) {
    return absl::InvalidArgumentError(absl::StrCat(
        "PNM parse error at byte ", maxval_offset, ": zero image dimension"));
  }
  if (*maxval != 255) {
    return absl::InvalidArgumentError(
        absl::StrCat("PNM parse error at byte ", maxval_offset, ": maxval ",
                     *maxval, " unsupported (only 255)"));
  }
  // Exactly one whitespace byte separates maxval from the raster.
  if (in.AtEnd() || !std::isspace(in.Peek())) {
    return in.Error("expected single whitespace after maxval");
  }
  in.Advance();

  const size_t expected =
      static_cast<size_t>(*width) * static_cast<size_t>(*height) * channels;
  const size_t available = bytes.size() - in.offset();
  if (available < expected) {
    return absl::InvalidArgumentError(absl::StrCat(
        "PNM parse error at byte ", bytes.size(), ": truncated pixel data (",
        available, " of ", expected, " bytes)"));
  }
  std::vector<Intensity> data(bytes.begin() + in.offset(),
                              bytes.begin() + in.offset() + expected);
  return Image(*width, *height, channels, std::move(data));
}

std::vector<uint8_t> SavePnm(const Image& img) {
  const std::string header =
      absl::StrCat(img.channels() == 1 ? "P5" : "P6", "\n", img.width(), " ",
                   img.height(), "\n255\n");
  std::vector<uint8_t> out;
  out.reserve(header.size() + img.sample_count());
  out.insert(out.end(), header.begin(), header.end());
  out.insert(out.end(), img.data().begin(), img.data().end());
  return out;
}

absl::StatusOr<Image> ReadPnmFile(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(file)),
                             std::istreambuf_iterator<char>());
  if (file.bad()) {
    return absl::DataLossError(absl::StrCat("read failed: ", path));
  }
  absl::StatusOr<Image> img = LoadPnm(bytes);
  if (!img.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat(path, ": ", img.status().message()));
  }
  return img;
}

absl::Status WritePnmFile(const std::string& path, const Image& img) {
  const std::vector<uint8_t> bytes = SavePnm(img);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot open ", path, " for writing"));
  }
  file.write(reinterpret_cast<const char*>(bytes.data()),
             static_cast<std::streamsize>(bytes.size()));
  file.close();
  if (!file) return absl::DataLossError(absl::StrCat("write failed: ", path));
  return absl::OkStatus();
}

std::vector<Plane> SplitChannels(const Image& img) {
  const int c = img.channels();
  const size_t pixels = static_cast<size_t>(img.width()) * img.height();
  std::vector<Plane> planes;
  planes.reserve(c);
  const auto src = img.data();
  for (int k = 0; k < c; ++k) {
    std::vector<Intensity> data(pixels);
    for (size_t i = 0; i < pixels; ++i) data[i] = src[i * c + k];
    planes.emplace_back(img.width(), img.height(), std::move(data));
  }
  return planes;
}

absl::StatusOr<Image> MergeChannels(std::span<const Plane> planes) {
  if (planes.size() != 1 && planes.size() != 3) {
    return absl::InvalidArgumentError(
        absl::StrCat("expected 1 or 3 planes, got ", planes.size()));
  }
  const int w = planes[0].width();
  const int h = planes[0].height();
  for (const Plane& p : planes) {
    if (p.width() != w || p.height() != h) {
      return absl::InvalidArgumentError(
          absl::StrCat("plane dimensions differ: ", w, "x", h, " vs ",
                       p.width(), "x", p.height()));
    }
  }
  const int c = static_cast<int>(planes.size());
  const size_t pixels = static_cast<size_t>(w) * h;
  std::vector<Intensity> data(pixels * c);
  for (int k = 0; k < c; ++k) {
    const auto src = planes[k].data();
    for (size_t i = 0; i < pixels; ++i) data[i * c + k] = src[i];
  }
  return Image(w, h, c, std::move(data));
}

Plane ToPlane(const Image& gray) {
  SP_CHECK(gray.channels() == 1, "ToPlane requires a grayscale image");
  return Plane(gray.width(), gray.height(),
               std::vector<Intensity>(gray.data().begin(), gray.data().end()));
}

}  // namespace salt_pepper
