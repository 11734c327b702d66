//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_CLI_RUN_CONFIG_HPP_
#define MOLGUIDE_CLI_RUN_CONFIG_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "molguide/analysis/clustering.hpp"
#include "molguide/chem/fingerprint.hpp"
#include "molguide/cli/dataset.hpp"
#include "molguide/guidance/guided_sampler.hpp"
#include "molguide/neural/graph_transformer.hpp"
#include "molguide/neural/training.hpp"

namespace molguide {

struct DataConfig {
  std::string train;
  std::string classifier;
  std::string smiles_column = "smiles";
  std::string label_column = "HIV_active";
  double heldout_fraction = 0.1;
};

/// Every field has a default; a config file overrides any subset.
struct RunConfig {
  std::uint64_t seed = 0;
  int diffusion_steps = 500;
  double lambda_edge = kDefaultEdgeLossWeight;
  GraphTransformerConfig model;
  /// steps, batch size and optimizer; lambda_edge above is authoritative.
  TrainConfig training;
  GuidanceConfig guidance;
  FingerprintParams screening = kScreeningFingerprint;
  FingerprintParams clustering = kClusteringFingerprint;
  std::size_t clusters = kDefaultClusterCount;
  bool filter_enabled = true;
  DatasetFilter filter;
  DataConfig data;
  std::string output_dir = ".";
  std::size_t workers = 1;
  /// Write an intermediate checkpoint every this many steps; 0 disables.
  std::size_t checkpoint_every = 0;

  /// Throws UsageError on out-of-range values.
  void validate() const;
};

/// Throws UsageError on malformed JSON, unknown fields or wrong types.
RunConfig parse_run_config(std::string_view json);
RunConfig load_run_config(const std::string &path);

/// Compact, key-sorted JSON covering every field.
std::string run_config_json(const RunConfig &config);

} // namespace molguide

#endif // MOLGUIDE_CLI_RUN_CONFIG_HPP_
