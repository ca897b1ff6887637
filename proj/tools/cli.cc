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

#include "cli.h"

#include <fstream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_split.h"
#include "salt_pepper/filters.h"
#include "salt_pepper/image.h"
#include "salt_pepper/metrics.h"
#include "salt_pepper/noise.h"
#include "salt_pepper/sweep.h"

namespace salt_pepper::cli {
namespace {

struct Options {
  // add-noise / denoise
  std::string input;
  std::string output;
  double density = 0.0;
  double salt_fraction = 0.5;
  uint64_t seed = 1;
  std::string filter = "pa";
  std::string trace;
  // window schedule
  int w_init = 3;
  int h = 2;
  int w_max = 9;
  int threads = 1;
  // metrics
  std::string original;
  std::string restored;
  std::string noisy;
  // sweep
  std::vector<std::string> inputs;
  std::string densities;
  std::string filters;
  std::string seeds;
  std::string config;
  std::string csv;
};

int Fail(std::ostream& err, int code, const absl::Status& status) {
  err << "error: " << status.message() << "\n";
  return code;
}

// Errors reading or decoding inputs, and writing outputs.
int FailIo(std::ostream& err, const absl::Status& status) {
  return Fail(err, kExitIo, status);
}

FilterParams ParamsFrom(const Options& o) { return {o.w_init, o.h, o.w_max}; }

int AddNoise(const Options& o, std::ostream& out, std::ostream& err) {
  const NoiseSpec spec{o.density, o.salt_fraction, o.seed};
  if (absl::Status s = ValidateNoiseSpec(spec); !s.ok()) {
    return Fail(err, kExitUsage, s);
  }
  absl::StatusOr<Image> img = ReadPnmFile(o.input);
  if (!img.ok()) return FailIo(err, img.status());
  const Image noisy = Inject(*img, spec);
  if (absl::Status s = WritePnmFile(o.output, noisy); !s.ok()) {
    return FailIo(err, s);
  }
  out << "corruption_rate: " << FormatNumber(*CorruptionRate(*img, noisy))
      << "\n";
  return kExitOk;
}

int Denoise(const Options& o, std::ostream& out, std::ostream& err) {
  absl::StatusOr<FilterKind> kind = ParseFilterName(o.filter);
  if (!kind.ok()) return Fail(err, kExitUsage, kind.status());
  const FilterSpec spec{*kind, ParamsFrom(o)};
  if (absl::Status s = ValidateFilterSpec(spec); !s.ok()) {
    return Fail(err, kExitUsage, s);
  }
  absl::StatusOr<Image> img = ReadPnmFile(o.input);
  if (!img.ok()) return FailIo(err, img.status());

  if (!o.trace.empty()) {
    std::vector<absl::string_view> parts = absl::StrSplit(o.trace, ',');
    int row, col;
    if (*kind != FilterKind::kPa || parts.size() != 2 ||
        !absl::SimpleAtoi(parts[0], &row) ||
        !absl::SimpleAtoi(parts[1], &col) || row < 0 || row >= img->height() ||
        col < 0 || col >= img->width()) {
      return Fail(err, kExitUsage,
                  absl::InvalidArgumentError(
                      "--trace takes ROW,COL inside the image and needs "
                      "--filter pa"));
    }
    const std::vector<Plane> planes = SplitChannels(*img);
    for (size_t c = 0; c < planes.size(); ++c) {
      const PaTrace t = TracePaPixel(planes[c], row, col, spec.params);
      for (const PaStep& step : t.steps) {
        out << "trace channel=" << c << " side=" << step.side
            << " clean=" << step.clean_count << "\n";
      }
      out << "trace channel=" << c << " outcome=" << PaOutcomeName(t.outcome)
          << " value=" << int{t.output} << "\n";
    }
  }

  absl::StatusOr<Image> restored =
      ApplyToImage(spec, *img, RunOptions{o.threads});
  if (!restored.ok()) return Fail(err, kExitUsage, restored.status());
  if (absl::Status s = WritePnmFile(o.output, *restored); !s.ok()) {
    return FailIo(err, s);
  }
  return kExitOk;
}

int Metrics(const Options& o, std::ostream& out, std::ostream& err) {
  absl::StatusOr<Image> original = ReadPnmFile(o.original);
  if (!original.ok()) return FailIo(err, original.status());
  absl::StatusOr<Image> restored = ReadPnmFile(o.restored);
  if (!restored.ok()) return FailIo(err, restored.status());
  std::optional<Image> noisy;
  if (!o.noisy.empty()) {
    absl::StatusOr<Image> n = ReadPnmFile(o.noisy);
    if (!n.ok()) return FailIo(err, n.status());
    noisy = *std::move(n);
  }
  absl::StatusOr<MetricsReport> report = ComputeMetrics(
      *original, *restored, noisy.has_value() ? &*noisy : nullptr);
  if (!report.ok()) {
    const bool undefined =
        report.status().code() == absl::StatusCode::kFailedPrecondition;
    return Fail(err, undefined ? kExitMetricUndefined : kExitIo,
                report.status());
  }
  out << "mse: " << FormatNumber(report->mse) << "\n";
  out << "psnr_db: " << FormatNumber(report->psnr_db) << "\n";
  if (report->ief.has_value()) {
    out << "ief: " << FormatNumber(*report->ief) << "\n";
  }
  return kExitOk;
}

// Fills plan fields from the config file, then from any flag given on the
// command line.
absl::Status BuildPlan(const Options& o, const CLI::App& sweep,
                       SweepPlan& plan) {
  std::map<std::string, std::vector<std::string>> file;
  if (!o.config.empty()) {
    std::ifstream in(o.config);
    if (!in) {
      return absl::NotFoundError("cannot open config file " + o.config);
    }
    const std::string text((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());
    absl::StatusOr<std::map<std::string, std::vector<std::string>>> parsed =
        ParseConfig(text);
    if (!parsed.ok()) return parsed.status();
    file = *std::move(parsed);
  }
  auto given = [&](const char* flag) { return sweep.count(flag) > 0; };
  auto last = [&](const std::string& key) -> const std::string* {
    auto it = file.find(key);
    return it == file.end() ? nullptr : &it->second.back();
  };
  auto parse_int = [&](const std::string& key, int& dst) -> absl::Status {
    if (const std::string* v = last(key)) {
      if (!absl::SimpleAtoi(*v, &dst)) {
        return absl::InvalidArgumentError("config " + key +
                                          ": not an integer: " + *v);
      }
    }
    return absl::OkStatus();
  };

  static const char* const kKnownKeys[] = {
      "input",         "densities", "filters", "seeds", "csv",
      "salt-fraction", "w-init",    "h",       "w-max", "threads"};
  for (const auto& [key, values] : file) {
    if (std::find(std::begin(kKnownKeys), std::end(kKnownKeys), key) ==
        std::end(kKnownKeys)) {
      return absl::InvalidArgumentError("unknown config key: " + key);
    }
  }

  if (given("--input")) {
    plan.inputs = o.inputs;
  } else if (auto it = file.find("input"); it != file.end()) {
    for (const std::string& v : it->second) {
      for (absl::string_view p : absl::StrSplit(v, ',', absl::SkipEmpty())) {
        plan.inputs.emplace_back(p);
      }
    }
  }
  const std::string* densities =
      given("--densities") ? &o.densities : last("densities");
  if (densities != nullptr) {
    absl::StatusOr<std::vector<double>> d = ParseDoubleList(*densities);
    if (!d.ok()) return d.status();
    plan.densities = *d;
  }
  const std::string* filters =
      given("--filters") ? &o.filters : last("filters");
  if (filters != nullptr) {
    absl::StatusOr<std::vector<FilterKind>> f = ParseFilterList(*filters);
    if (!f.ok()) return f.status();
    plan.filters = *f;
  }
  const std::string* seeds = given("--seeds") ? &o.seeds : last("seeds");
  if (seeds != nullptr) {
    absl::StatusOr<std::vector<uint64_t>> s = ParseSeedList(*seeds);
    if (!s.ok()) return s.status();
    plan.seeds = *s;
  }
  if (given("--csv")) {
    plan.csv_path = o.csv;
  } else if (const std::string* v = last("csv")) {
    plan.csv_path = *v;
  }
  if (given("--salt-fraction")) {
    plan.salt_fraction = o.salt_fraction;
  } else if (const std::string* v = last("salt-fraction")) {
    if (!absl::SimpleAtod(*v, &plan.salt_fraction)) {
      return absl::InvalidArgumentError("config salt-fraction: not a number");
    }
  }
  if (absl::Status s = parse_int("w-init", plan.params.w_init); !s.ok()) {
    return s;
  }
  if (absl::Status s = parse_int("h", plan.params.h); !s.ok()) return s;
  if (absl::Status s = parse_int("w-max", plan.params.w_max); !s.ok()) {
    return s;
  }
  if (absl::Status s = parse_int("threads", plan.threads); !s.ok()) return s;
  if (given("--w-init")) plan.params.w_init = o.w_init;
  if (given("--h")) plan.params.h = o.h;
  if (given("--w-max")) plan.params.w_max = o.w_max;
  if (given("--threads")) plan.threads = o.threads;

  if (plan.inputs.empty()) {
    return absl::InvalidArgumentError("sweep needs at least one --input");
  }
  if (plan.csv_path.empty()) {
    return absl::InvalidArgumentError("sweep needs --csv");
  }
  return ValidateSweepPlan(plan);
}

int Sweep(const Options& o, const CLI::App& sweep, std::ostream& out,
          std::ostream& err) {
  SweepPlan plan;
  if (absl::Status s = BuildPlan(o, sweep, plan); !s.ok()) {
    return Fail(
        err, s.code() == absl::StatusCode::kNotFound ? kExitIo : kExitUsage, s);
  }
  absl::StatusOr<std::vector<SweepRecord>> records = RunSweep(plan);
  if (!records.ok()) return FailIo(err, records.status());
  if (absl::Status s = WriteFileAtomically(plan.csv_path, FormatCsv(*records));
      !s.ok()) {
    return FailIo(err, s);
  }
  out << "wrote " << records->size() << " rows to " << plan.csv_path << "\n";
  return kExitOk;
}

void AddWindowFlags(CLI::App& app, Options& o) {
  app.add_option("--w-init", o.w_init, "Initial window side (odd, >= 3)");
  app.add_option("--h", o.h, "Window growth step (even, >= 2)");
  app.add_option("--w-max", o.w_max, "Largest window side (odd)");
  app.add_option("--threads", o.threads,
                 "Worker threads for row-parallel filtering (0: all cores)");
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Salt-and-pepper noise injection, denoising and benchmarking",
               "spdenoise"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  CLI::App* add_noise =
      app.add_subcommand("add-noise", "Inject salt-and-pepper noise");
  add_noise->add_option("--input", o.input, "Input PGM/PPM")->required();
  add_noise->add_option("--output", o.output, "Output PGM/PPM")->required();
  add_noise->add_option("--density", o.density, "Corruption probability")
      ->required();
  add_noise->add_option("--salt-fraction", o.salt_fraction,
                        "Probability a corrupted sample becomes 255");
  add_noise->add_option("--seed", o.seed, "PRNG seed");

  CLI::App* denoise = app.add_subcommand("denoise", "Apply one filter");
  denoise->add_option("--input", o.input, "Input PGM/PPM")->required();
  denoise->add_option("--output", o.output, "Output PGM/PPM")->required();
  denoise->add_option("--filter", o.filter, "One of: " + FilterNameList());
  denoise->add_option("--trace", o.trace,
                      "ROW,COL: print the pa window trace for that pixel");
  AddWindowFlags(*denoise, o);

  CLI::App* metrics = app.add_subcommand("metrics", "MSE, PSNR and IEF");
  metrics->add_option("--original", o.original, "Clean reference")->required();
  metrics->add_option("--restored", o.restored, "Filtered image")->required();
  metrics->add_option("--noisy", o.noisy, "Noisy input (enables IEF)");

  CLI::App* sweep =
      app.add_subcommand("sweep", "Density x filter x seed benchmark to CSV");
  sweep->add_option("--input", o.inputs, "Input PGM/PPM (repeatable)");
  sweep->add_option("--densities", o.densities,
                    "Comma list in (0,1] (default 0.1,...,0.9)");
  sweep->add_option("--filters", o.filters, "Comma list (default all)");
  sweep->add_option("--seeds", o.seeds, "Comma list (default 1)");
  sweep->add_option("--salt-fraction", o.salt_fraction,
                    "Probability a corrupted sample becomes 255");
  sweep->add_option("--config", o.config, "key=value plan file");
  sweep->add_option("--csv", o.csv, "Output CSV path");
  AddWindowFlags(*sweep, o);

  std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (add_noise->parsed()) return AddNoise(o, out, err);
  if (denoise->parsed()) return Denoise(o, out, err);
  if (metrics->parsed()) return Metrics(o, out, err);
  return Sweep(o, *sweep, out, err);
}

}  // namespace salt_pepper::cli
