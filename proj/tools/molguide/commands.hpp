//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_TOOLS_COMMANDS_HPP_
#define MOLGUIDE_TOOLS_COMMANDS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace molguide::tool {

// Settings shared by every subcommand; empty optionals defer to the config.
struct Common {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> workers;
};

struct TrainDiffusionArgs {
  Common common;
  std::string out;
};

struct TrainClassifierArgs {
  Common common;
  std::string loss = "bce";
  std::string denoiser;
  std::string out;
};

struct SampleArgs {
  Common common;
  std::string checkpoint;
  std::string classifier;
  std::optional<double> lambda;
  std::optional<int> label;
  std::optional<int> sign;
  std::size_t count = 1000;
  std::string train;
  std::string out;
};

struct ScreenArgs {
  Common common;
  std::string drugs;
  std::string train;
  std::string generated;
  std::string out;
};

struct DegradationArgs {
  Common common;
  std::string drugs;
  std::string sources;
  std::optional<std::size_t> clusters;
  std::string out_dir;
};

struct FingerprintArgs {
  Common common;
  std::string in;
  std::optional<int> radius;
  std::optional<std::size_t> width;
  std::string out;
};

struct DatasetStatsArgs {
  Common common;
  std::string in;
  std::string out;
};

void train_diffusion(const TrainDiffusionArgs &args);
void train_classifier(const TrainClassifierArgs &args);
void sample(const SampleArgs &args);
void screen(const ScreenArgs &args);
void analyze_degradation(const DegradationArgs &args);
void fingerprint(const FingerprintArgs &args);
void dataset_stats(const DatasetStatsArgs &args);

} // namespace molguide::tool

#endif // MOLGUIDE_TOOLS_COMMANDS_HPP_
