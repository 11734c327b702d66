//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_CLI_CHECKPOINT_HPP_
#define MOLGUIDE_CLI_CHECKPOINT_HPP_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "molguide/diffusion/transitions.hpp"
#include "molguide/guidance/classifier.hpp"
#include "molguide/neural/graph_transformer.hpp"

namespace molguide {

inline constexpr std::string_view kCheckpointMagic = "MOLGUIDE-CHECKPOINT 1";

/// Layout: magic line, decimal header byte count line, JSON header, raw
/// little-endian float64 tensor payloads at the header's offsets, and an
/// 8-byte little-endian FNV-1a-64 of everything before it.
struct Checkpoint {
  ModelHead head = ModelHead::kDenoiser;
  StateSpace space;
  GraphTransformerConfig model;
  std::uint64_t init_seed = 0;
  int diffusion_steps = 0;
  double cosine_offset = kCosineOffset;
  Marginals marginals;
  std::vector<double> node_count_weights;
  double lambda_edge = 0.0;
  double lambda_guidance = 0.0;
  /// Set for classifier checkpoints.
  std::optional<ClassifierLoss> loss;
  std::size_t trained_steps = 0;
  /// RunConfig echo as JSON text.
  std::string config_json = "{}";
  std::string tool_version;
  std::vector<std::pair<std::string, Tensor>> tensors;

  NoiseSchedule schedule() const {
    return NoiseSchedule::cosine(diffusion_steps, cosine_offset);
  }
  TransitionModel transitions() const {
    return build_transitions(schedule(), marginals);
  }
  /// Network with the stored parameters. Throws DataError on a mismatch.
  GraphTransformer instantiate() const;
};

void write_checkpoint(std::ostream &os, const Checkpoint &ckpt);
/// Throws DataError on a bad magic, malformed header, truncated payload or
/// checksum mismatch.
Checkpoint read_checkpoint(std::istream &is);

void save_checkpoint(const std::string &path, const Checkpoint &ckpt);
Checkpoint load_checkpoint(const std::string &path);

} // namespace molguide

#endif // MOLGUIDE_CLI_CHECKPOINT_HPP_
