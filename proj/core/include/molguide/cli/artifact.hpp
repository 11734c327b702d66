//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_CLI_ARTIFACT_HPP_
#define MOLGUIDE_CLI_ARTIFACT_HPP_

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "molguide/cli/run_config.hpp"

namespace molguide {

/// Ordered key/value list of command parameters.
using ArtifactParams = std::vector<std::pair<std::string, std::string>>;

/// Three '#' lines: tool name and version, the RunConfig echo as one JSON
/// line, and the command parameters as one JSON line.
std::string artifact_header(const std::string &command,
                            const RunConfig &config,
                            const ArtifactParams &params);

/// Writes bytes to path, replacing it. Throws DataError on failure.
void write_text_file(const std::string &path, const std::string &bytes);

/// Joins a directory and a file name; "." yields the name unchanged.
std::string join_path(const std::string &dir, const std::string &name);

} // namespace molguide

#endif // MOLGUIDE_CLI_ARTIFACT_HPP_
