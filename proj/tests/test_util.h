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

#ifndef SALT_PEPPER_TESTS_TEST_UTIL_H_
#define SALT_PEPPER_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "salt_pepper/image.h"

namespace salt_pepper::testing {

// The 9x9 worked example of the adaptive filter; the processing pixel is the
// 255 at (4,4).
inline Plane GoldenMatrix() {
  return Plane(9, 9,
               std::vector<Intensity>{
                   0,   0,   0,   0,   0,   0,   0,   255, 124,  //
                   115, 0,   118, 187, 0,   116, 115, 0,   112,  //
                   255, 67,  0,   0,   255, 0,   0,   255, 255,  //
                   255, 97,  0,   134, 0,   0,   255, 0,   0,    //
                   255, 0,   255, 0,   255, 123, 0,   255, 0,    //
                   0,   255, 0,   255, 255, 0,   255, 0,   0,    //
                   0,   119, 116, 255, 0,   255, 0,   0,   0,    //
                   0,   178, 255, 0,   255, 0,   0,   255, 0,    //
                   113, 255, 0,   0,   110, 234, 255, 0,   112,  //
               });
}

// Uniform intensities with an extra `impulse_rate` share forced to 0/255.
inline Plane RandomPlane(int width, int height, double impulse_rate,
                         std::mt19937_64& rng) {
  std::uniform_int_distribution<int> value(0, 255);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Plane p(width, height);
  for (Intensity& v : p.data()) {
    v = static_cast<Intensity>(value(rng));
    if (u(rng) < impulse_rate) v = u(rng) < 0.5 ? 0 : 255;
  }
  return p;
}

// Plane with no 0/255 values.
inline Plane RandomCleanPlane(int width, int height, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> value(1, 254);
  Plane p(width, height);
  for (Intensity& v : p.data()) v = static_cast<Intensity>(value(rng));
  return p;
}

inline Image RandomImage(int width, int height, int channels,
                         std::mt19937_64& rng) {
  std::uniform_int_distribution<int> value(0, 255);
  Image img(width, height, channels);
  for (Intensity& v : img.data()) v = static_cast<Intensity>(value(rng));
  return img;
}

inline Image AsImage(const Plane& p) {
  return Image(p.width(), p.height(), 1,
               std::vector<Intensity>(p.data().begin(), p.data().end()));
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("salt_pepper_test_" + std::to_string(rd()) + "_" +
             std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ignored;
    std::filesystem::remove_all(path_, ignored);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string File(const std::string& name) const {
    return (path_ / name).string();
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace salt_pepper::testing

#endif  // SALT_PEPPER_TESTS_TEST_UTIL_H_
