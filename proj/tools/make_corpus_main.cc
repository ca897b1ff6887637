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

// Writes the synthetic benchmark corpus used by the tests and the README
// examples.

#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "salt_pepper/image.h"
#include "salt_pepper/synthetic.h"

int main(int argc, char** argv) {
  std::string dir = "corpus";
  int size = 512;
  uint64_t seed = 7;
  CLI::App app{"Generate the synthetic PGM/PPM test corpus", "make_corpus"};
  app.add_option("--output-dir", dir, "Directory to write into");
  app.add_option("--size", size, "Width and height in pixels")
      ->check(CLI::Range(8, 8192));
  app.add_option("--seed", seed, "Seed for the dead-leaves images");
  CLI11_PARSE(app, argc, argv);

  namespace sp = salt_pepper;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    std::cerr << "error: cannot create " << dir << ": " << ec.message() << "\n";
    return 2;
  }
  const std::string n = std::to_string(size);
  const std::pair<std::string, sp::Image> files[] = {
      {"gradient_" + n + ".pgm", sp::MakeGradient(size, size, 1)},
      {"checker_" + n + ".pgm", sp::MakeCheckerboard(size, size, 16, 1)},
      {"leaves_" + n + ".pgm", sp::MakeDeadLeaves(size, size, 1, seed)},
      {"leaves_rgb_" + n + ".ppm", sp::MakeDeadLeaves(size, size, 3, seed + 1)},
  };
  for (const auto& [name, img] : files) {
    const std::string path = (std::filesystem::path(dir) / name).string();
    if (auto s = sp::WritePnmFile(path, img); !s.ok()) {
      std::cerr << "error: " << s.message() << "\n";
      return 2;
    }
    std::cout << path << "\n";
  }
  return 0;
}
