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

#include "salt_pepper/sweep.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "salt_pepper/metrics.h"
#include "salt_pepper/noise.h"

namespace salt_pepper {
namespace {

absl::string_view View(std::string_view s) {
  return absl::string_view(s.data(), s.size());
}

std::vector<absl::string_view> SplitList(std::string_view text) {
  std::vector<absl::string_view> out;
  for (absl::string_view item : absl::StrSplit(View(text), ',')) {
    item = absl::StripAsciiWhitespace(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string CsvField(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(s);
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

absl::Status ValidateSweepPlan(const SweepPlan& plan) {
  if (plan.densities.empty()) {
    return absl::InvalidArgumentError("sweep needs at least one density");
  }
  for (double d : plan.densities) {
    if (!(d > 0.0 && d <= 1.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat("sweep densities must be in (0,1], got ", d));
    }
  }
  if (plan.filters.empty()) {
    return absl::InvalidArgumentError("sweep needs at least one filter");
  }
  if (plan.seeds.empty()) {
    return absl::InvalidArgumentError("sweep needs at least one seed");
  }
  if (!(plan.salt_fraction >= 0.0 && plan.salt_fraction <= 1.0)) {
    return absl::InvalidArgumentError("salt fraction must be in [0,1]");
  }
  for (FilterKind k : plan.filters) {
    if (absl::Status s = ValidateFilterSpec({k, plan.params}); !s.ok()) {
      return s;
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<SweepRecord>> RunSweep(
    const SweepPlan& plan, std::span<const NamedImage> images) {
  if (absl::Status s = ValidateSweepPlan(plan); !s.ok()) return s;
  if (images.empty()) {
    return absl::InvalidArgumentError("sweep needs at least one image");
  }
  const RunOptions run{plan.threads};
  std::vector<SweepRecord> records;
  records.reserve(images.size() * plan.densities.size() * plan.seeds.size() *
                  plan.filters.size());
  for (const NamedImage& named : images) {
    for (double density : plan.densities) {
      for (uint64_t seed : plan.seeds) {
        const Image noisy =
            Inject(named.image, {density, plan.salt_fraction, seed});
        for (FilterKind kind : plan.filters) {
          const auto start = std::chrono::steady_clock::now();
          absl::StatusOr<Image> restored =
              ApplyToImage({kind, plan.params}, noisy, run);
          const auto stop = std::chrono::steady_clock::now();
          if (!restored.ok()) return restored.status();

          SweepRecord rec;
          rec.image = named.name;
          rec.filter = kind;
          rec.density = density;
          rec.seed = seed;
          absl::StatusOr<MetricsReport> m =
              ComputeMetrics(named.image, *restored);
          if (!m.ok()) return m.status();
          rec.mse = m->mse;
          rec.psnr_db = m->psnr_db;
          // A draw that happens to corrupt nothing leaves IEF undefined;
          // record it as NaN rather than abort the sweep.
          absl::StatusOr<double> ief = Ief(named.image, *restored, noisy);
          rec.ief = ief.ok() ? *ief : std::nan("");
          rec.runtime_ms =
              std::chrono::duration<double, std::milli>(stop - start).count();
          records.push_back(std::move(rec));
        }
      }
    }
  }
  return records;
}

absl::StatusOr<std::vector<SweepRecord>> RunSweep(const SweepPlan& plan) {
  if (absl::Status s = ValidateSweepPlan(plan); !s.ok()) return s;
  if (plan.inputs.empty()) {
    return absl::InvalidArgumentError("sweep needs at least one input image");
  }
  std::vector<NamedImage> images;
  images.reserve(plan.inputs.size());
  for (const std::string& path : plan.inputs) {
    absl::StatusOr<Image> img = ReadPnmFile(path);
    if (!img.ok()) return img.status();
    images.push_back(
        {std::filesystem::path(path).stem().string(), *std::move(img)});
  }
  return RunSweep(plan, images);
}

std::string FormatNumber(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", value);
  return buf;
}

std::string FormatCsv(std::span<const SweepRecord> records) {
  std::string out = absl::StrCat(std::string(kCsvHeader), "\n");
  for (const SweepRecord& r : records) {
    absl::StrAppend(&out, CsvField(r.image), ",",
                    std::string(FilterName(r.filter)), ",",
                    FormatNumber(r.density), ",", r.seed, ",",
                    FormatNumber(r.mse), ",", FormatNumber(r.psnr_db), ",",
                    FormatNumber(r.ief), ",", FormatNumber(r.runtime_ms), "\n");
  }
  return out;
}

absl::Status WriteFileAtomically(const std::string& path,
                                 std::string_view contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) {
      return absl::PermissionDeniedError(
          absl::StrCat("cannot open ", tmp, " for writing"));
    }
    file.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    file.close();
    if (!file) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      return absl::DataLossError(absl::StrCat("write failed: ", tmp));
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    return absl::PermissionDeniedError(
        absl::StrCat("cannot rename ", tmp, " to ", path, ": ", ec.message()));
  }
  return absl::OkStatus();
}

absl::StatusOr<std::map<std::string, std::vector<std::string>>> ParseConfig(
    std::string_view text) {
  std::map<std::string, std::vector<std::string>> out;
  int line_no = 0;
  for (absl::string_view line : absl::StrSplit(View(text), '\n')) {
    ++line_no;
    if (const size_t hash = line.find('#'); hash != absl::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = absl::StripAsciiWhitespace(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      return absl::InvalidArgumentError(
          absl::StrCat("config line ", line_no, ": expected key=value"));
    }
    const absl::string_view key =
        absl::StripAsciiWhitespace(line.substr(0, eq));
    const absl::string_view value =
        absl::StripAsciiWhitespace(line.substr(eq + 1));
    if (key.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("config line ", line_no, ": empty key"));
    }
    out[std::string(key)].emplace_back(std::string(value));
  }
  return out;
}

absl::StatusOr<std::vector<double>> ParseDoubleList(std::string_view text) {
  std::vector<double> out;
  for (absl::string_view item : SplitList(text)) {
    double v;
    if (!absl::SimpleAtod(item, &v)) {
      return absl::InvalidArgumentError(
          absl::StrCat("not a number: '", item, "'"));
    }
    out.push_back(v);
  }
  if (out.empty()) return absl::InvalidArgumentError("empty list");
  return out;
}

absl::StatusOr<std::vector<uint64_t>> ParseSeedList(std::string_view text) {
  std::vector<uint64_t> out;
  for (absl::string_view item : SplitList(text)) {
    uint64_t v;
    if (!absl::SimpleAtoi(item, &v)) {
      return absl::InvalidArgumentError(
          absl::StrCat("not an unsigned 64-bit seed: '", item, "'"));
    }
    out.push_back(v);
  }
  if (out.empty()) return absl::InvalidArgumentError("empty seed list");
  return out;
}

absl::StatusOr<std::vector<FilterKind>> ParseFilterList(std::string_view text) {
  std::vector<FilterKind> out;
  for (absl::string_view item : SplitList(text)) {
    absl::StatusOr<FilterKind> k =
        ParseFilterName(std::string_view(item.data(), item.size()));
    if (!k.ok()) return k.status();
    out.push_back(*k);
  }
  if (out.empty()) return absl::InvalidArgumentError("empty filter list");
  return out;
}

}  // namespace salt_pepper
