//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "molguide/cli/artifact.hpp"

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "molguide/common/error.hpp"
#include "molguide/version.hpp"

namespace molguide {

std::string artifact_header(const std::string &command,
                            const RunConfig &config,
                            const ArtifactParams &params) {
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto &[key, value]: params)
    p[key] = value;
  std::string out = "# molguide ";
  out += kVersion;
  out += ' ';
  out += command;
  out += "\n# config: ";
  out += run_config_json(config);
  out += "\n# params: ";
  out += p.dump();
  out += '\n';
  return out;
}

void write_text_file(const std::string &path, const std::string &bytes) {
  const std::filesystem::path target(path);
  if (target.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(target.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out)
    throw DataError("cannot write '" + path + "'");
}

std::string join_path(const std::string &dir, const std::string &name) {
  if (dir.empty() || dir == ".")
    return name;
  return (std::filesystem::path(dir) / name).string();
}

} // namespace molguide
