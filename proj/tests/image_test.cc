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

#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "test_util.h"

namespace salt_pepper {
namespace {

std::vector<uint8_t> Bytes(const std::string& header,
                           const std::vector<uint8_t>& pixels = {}) {
  std::vector<uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), pixels.begin(), pixels.end());
  return out;
}

TEST(LoadPnmTest, Grayscale) {
  absl::StatusOr<Image> img =
      LoadPnm(Bytes("P5\n2 2\n255\n", {0, 255, 10, 200}));
  ASSERT_TRUE(img.ok()) << img.status();
  EXPECT_EQ(img->width(), 2);
  EXPECT_EQ(img->height(), 2);
  EXPECT_EQ(img->channels(), 1);
  EXPECT_EQ(img->at(0, 0), 0);
  EXPECT_EQ(img->at(0, 1), 255);
  EXPECT_EQ(img->at(1, 0), 10);
  EXPECT_EQ(img->at(1, 1), 200);
}

TEST(LoadPnmTest, Rgb) {
  absl::StatusOr<Image> img = LoadPnm(Bytes("P6\n1 1\n255\n", {1, 2, 3}));
  ASSERT_TRUE(img.ok()) << img.status();
  EXPECT_EQ(img->channels(), 3);
  EXPECT_EQ(img->at(0, 0, 0), 1);
  EXPECT_EQ(img->at(0, 0, 1), 2);
  EXPECT_EQ(img->at(0, 0, 2), 3);
}

TEST(LoadPnmTest, AcceptsCommentsAndLooseWhitespace) {
  absl::StatusOr<Image> img = LoadPnm(
      Bytes("P5 # made by hand\n# another\n  3\t1\r\n#c\n255\n", {7, 8, 9}));
  ASSERT_TRUE(img.ok()) << img.status();
  EXPECT_EQ(img->width(), 3);
  EXPECT_EQ(img->at(0, 2), 9);
  // Comments are never emitted.
  EXPECT_EQ(SavePnm(*img), Bytes("P5\n3 1\n255\n", {7, 8, 9}));
}

TEST(LoadPnmTest, RasterMayStartWithWhitespaceByte) {
  // Only one separator byte follows maxval; a raster value of 10 ('\n') must
  // not be swallowed.
  absl::StatusOr<Image> img = LoadPnm(Bytes("P5\n2 1\n255\n", {10, 32}));
  ASSERT_TRUE(img.ok()) << img.status();
  EXPECT_EQ(img->at(0, 0), 10);
  EXPECT_EQ(img->at(0, 1), 32);
}

TEST(LoadPnmTest, ErrorsNameTheByteOffset) {
  struct Case {
    std::vector<uint8_t> bytes;
    std::string expect;
  };
  const Case cases[] = {
      {Bytes("P2\n1 1\n255\n0"), "byte 0"},
      {Bytes("P3\n1 1\n255\n0 0 0"), "byte 0"},
      {Bytes(""), "byte 0"},
      {Bytes("P5\nx 1\n255\n", {0}), "byte 3"},
      {Bytes("P5\n1 1\n65535\n", {0, 0}), "byte 7"},
      {Bytes("P5\n1 1\n15\n", {0}), "maxval 15"},
      {Bytes("P5\n2 2\n255\n", {1, 2, 3}), "truncated"},
      {Bytes("P5\n0 2\n255\n"), "zero image dimension"},
      {Bytes("P5\n1 1\n255"), "byte 10"},
  };
  for (const Case& c : cases) {
    absl::StatusOr<Image> img = LoadPnm(c.bytes);
    ASSERT_FALSE(img.ok()) << std::string(c.bytes.begin(), c.bytes.end());
    EXPECT_EQ(img.status().code(), absl::StatusCode::kInvalidArgument);
    EXPECT_NE(std::string(img.status().message()).find(c.expect),
              std::string::npos)
        << img.status();
  }
}

TEST(SavePnmTest, CanonicalForm) {
  EXPECT_EQ(SavePnm(Image(1, 1, 1, 0)), Bytes("P5\n1 1\n255\n", {0}));
  EXPECT_EQ(SavePnm(Image(1, 1, 3, std::vector<Intensity>{255, 0, 255})),
            Bytes("P6\n1 1\n255\n", {255, 0, 255}));
}

TEST(SavePnmTest, RoundTripIsExact) {
  std::mt19937_64 rng(11);
  for (int channels : {1, 3}) {
    const Image img = testing::RandomImage(512, 512, channels, rng);
    const std::vector<uint8_t> bytes = SavePnm(img);
    absl::StatusOr<Image> back = LoadPnm(bytes);
    ASSERT_TRUE(back.ok());
    EXPECT_EQ(*back, img);
    EXPECT_EQ(SavePnm(*back), bytes);
  }
}

TEST(PnmFileTest, ReadWriteAndMissingFile) {
  testing::TempDir dir;
  const Image img(3, 2, 3, 77);
  ASSERT_TRUE(WritePnmFile(dir.File("a.ppm"), img).ok());
  absl::StatusOr<Image> back = ReadPnmFile(dir.File("a.ppm"));
  ASSERT_TRUE(back.ok());
  EXPECT_EQ(*back, img);
  EXPECT_EQ(ReadPnmFile(dir.File("missing.pgm")).status().code(),
            absl::StatusCode::kNotFound);
  EXPECT_FALSE(WritePnmFile(dir.File("no/such/dir.pgm"), img).ok());
}

TEST(ChannelsTest, GrayscaleSplitsToOnePlane) {
  const Image img(2, 1, 1, std::vector<Intensity>{4, 5});
  const std::vector<Plane> planes = SplitChannels(img);
  ASSERT_EQ(planes.size(), 1u);
  EXPECT_EQ(planes[0], Plane(2, 1, std::vector<Intensity>{4, 5}));
  absl::StatusOr<Image> merged = MergeChannels(planes);
  ASSERT_TRUE(merged.ok());
  EXPECT_EQ(*merged, img);
}

TEST(ChannelsTest, RgbPixelSplitsPerChannel) {
  const std::vector<Plane> planes =
      SplitChannels(Image(1, 1, 3, std::vector<Intensity>{9, 8, 7}));
  ASSERT_EQ(planes.size(), 3u);
  EXPECT_EQ(planes[0].at(0, 0), 9);
  EXPECT_EQ(planes[1].at(0, 0), 8);
  EXPECT_EQ(planes[2].at(0, 0), 7);
}

TEST(ChannelsTest, SplitAndMergeAreInverses) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int w = 1 + static_cast<int>(rng() % 17);
    const int h = 1 + static_cast<int>(rng() % 17);
    const Image img = testing::RandomImage(w, h, trial % 2 ? 3 : 1, rng);
    const std::vector<Plane> planes = SplitChannels(img);
    absl::StatusOr<Image> merged = MergeChannels(planes);
    ASSERT_TRUE(merged.ok());
    EXPECT_EQ(*merged, img);
    EXPECT_EQ(SplitChannels(*merged), planes);
  }
}

TEST(ChannelsTest, MergeRejectsBadInput) {
  const Plane a(2, 2), b(2, 3);
  const std::vector<Plane> mismatched = {a, a, b};
  EXPECT_EQ(MergeChannels(mismatched).status().code(),
            absl::StatusCode::kInvalidArgument);
  const std::vector<Plane> two = {a, a};
  EXPECT_FALSE(MergeChannels(two).ok());
  EXPECT_FALSE(MergeChannels({}).ok());
}

TEST(ImageDeathTest, ConstructorRejectsInvalidShapes) {
  EXPECT_DEATH(Image(0, 1, 1), "invalid image dimensions");
  EXPECT_DEATH(Image(1, 1, 2), "invalid image dimensions");
  EXPECT_DEATH(Image(2, 2, 1, std::vector<Intensity>(3)), "data length");
}

}  // namespace
}  // namespace salt_pepper
