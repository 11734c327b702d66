//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "molguide/cli/checkpoint.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "molguide/cli/artifact.hpp"
#include "molguide/common/error.hpp"
#include "molguide/common/hash.hpp"

namespace molguide {
namespace {
using Json = nlohmann::json;

void put_le(std::string &out, std::uint64_t bits) {
  for (int i = 0; i < 8; ++i)
    out += static_cast<char>((bits >> (8 * i)) & 0xff);
}

std::uint64_t get_le(const char *p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i)
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(p[i])) << (8 * i);
  return v;
}

std::uint64_t checksum(std::string_view bytes) {
  Fnv1a64 h;
  h.update(bytes);
  return h.digest();
}

const char *head_name(ModelHead h) {
  return h == ModelHead::kDenoiser ? "denoiser" : "classifier";
}
} // namespace

GraphTransformer Checkpoint::instantiate() const {
  GraphTransformer net(model, space, head, init_seed);
  net.params().load(tensors);
  return net;
}

void write_checkpoint(std::ostream &os, const Checkpoint &c) {
  Json tensors = Json::array();
  std::string payload;
  for (const auto &[name, t]: c.tensors) {
    tensors.push_back({ { "name", name },
                        { "shape", t.shape },
                        { "dtype", "float64" },
                        { "offset", payload.size() } });
    for (double v: t.data)
      put_le(payload, std::bit_cast<std::uint64_t>(v));
  }
  Json header = {
    { "format", "molguide-checkpoint" },
    { "version", 1 },
    { "tool_version", c.tool_version },
    { "head", head_name(c.head) },
    { "state_space", { { "atom_classes", c.space.atom_classes },
                       { "edge_classes", c.space.edge_classes } } },
    { "model", { { "layers", c.model.layers },
                 { "node_width", c.model.node_width },
                 { "edge_width", c.model.edge_width },
                 { "global_width", c.model.global_width },
                 { "heads", c.model.heads },
                 { "dropout", c.model.dropout } } },
    { "init_seed", c.init_seed },
    { "schedule", { { "type", "cosine" },
                    { "T", c.diffusion_steps },
                    { "s", c.cosine_offset } } },
    { "marginals", { { "node", c.marginals.node }, { "edge", c.marginals.edge } } },
    { "node_count_weights", c.node_count_weights },
    { "lambda_edge", c.lambda_edge },
    { "lambda_guidance", c.lambda_guidance },
    { "classifier_loss", c.loss ? Json(std::string(classifier_loss_name(*c.loss)))
                                : Json(nullptr) },
    { "trained_steps", c.trained_steps },
    { "config", Json::parse(c.config_json) },
    { "payload_bytes", payload.size() },
    { "tensors", tensors },
  };
  const std::string text = header.dump();
  std::string all;
  all += kCheckpointMagic;
  all += '\n';
  all += std::to_string(text.size());
  all += '\n';
  all += text;
  all += '\n';
  all += payload;
  put_le(all, checksum(all));
  os.write(all.data(), static_cast<std::streamsize>(all.size()));
  if (!os)
    throw DataError("failed to write checkpoint");
}

Checkpoint read_checkpoint(std::istream &is) {
  std::ostringstream ss;
  ss << is.rdbuf();
  const std::string all = ss.str();
  if (all.rfind(std::string(kCheckpointMagic) + "\n", 0) != 0)
    throw DataError("not a molguide checkpoint");
  if (all.size() < 8)
    throw DataError("checkpoint truncated");
  const std::string_view body(all.data(), all.size() - 8);
  if (checksum(body) != get_le(all.data() + all.size() - 8))
    throw DataError("checkpoint checksum mismatch");

  std::size_t pos = kCheckpointMagic.size() + 1;
  const std::size_t nl = all.find('\n', pos);
  if (nl == std::string::npos)
    throw DataError("checkpoint header length missing");
  std::size_t header_len = 0;
  try {
    header_len = std::stoul(all.substr(pos, nl - pos));
  } catch (const std::exception &) {
    throw DataError("checkpoint header length malformed");
  }
  pos = nl + 1;
  if (pos + header_len + 1 > body.size())
    throw DataError("checkpoint header truncated");

  Checkpoint c;
  try {
    const Json h = Json::parse(all.substr(pos, header_len));
    const std::size_t payload_at = pos + header_len + 1;
    if (h.at("format") != "molguide-checkpoint" || h.at("version") != 1)
      throw DataError("unsupported checkpoint version");
    c.tool_version = h.at("tool_version").get<std::string>();
    const std::string head = h.at("head").get<std::string>();
    if (head != "denoiser" && head != "classifier")
      throw DataError("unknown checkpoint head '" + head + "'");
    c.head = head == "denoiser" ? ModelHead::kDenoiser : ModelHead::kClassifier;
    c.space.atom_classes = h.at("state_space").at("atom_classes").get<std::size_t>();
    c.space.edge_classes = h.at("state_space").at("edge_classes").get<std::size_t>();
    const Json &m = h.at("model");
    c.model.layers = m.at("layers").get<std::size_t>();
    c.model.node_width = m.at("node_width").get<std::size_t>();
    c.model.edge_width = m.at("edge_width").get<std::size_t>();
    c.model.global_width = m.at("global_width").get<std::size_t>();
    c.model.heads = m.at("heads").get<std::size_t>();
    c.model.dropout = m.at("dropout").get<double>();
    c.init_seed = h.at("init_seed").get<std::uint64_t>();
    if (h.at("schedule").at("type") != "cosine")
      throw DataError("unsupported schedule type");
    c.diffusion_steps = h.at("schedule").at("T").get<int>();
    c.cosine_offset = h.at("schedule").at("s").get<double>();
    c.marginals.node = h.at("marginals").at("node").get<std::vector<double>>();
    c.marginals.edge = h.at("marginals").at("edge").get<std::vector<double>>();
    c.node_count_weights = h.at("node_count_weights").get<std::vector<double>>();
    c.lambda_edge = h.at("lambda_edge").get<double>();
    c.lambda_guidance = h.at("lambda_guidance").get<double>();
    if (!h.at("classifier_loss").is_null())
      c.loss = parse_classifier_loss(h.at("classifier_loss").get<std::string>());
    c.trained_steps = h.at("trained_steps").get<std::size_t>();
    c.config_json = h.at("config").dump();
    const std::size_t payload_bytes = h.at("payload_bytes").get<std::size_t>();
    if (payload_at + payload_bytes != body.size())
      throw DataError("checkpoint payload size mismatch");
    for (const Json &t: h.at("tensors")) {
      if (t.at("dtype") != "float64")
        throw DataError("unsupported tensor dtype");
      Tensor value(t.at("shape").get<Shape>());
      const std::size_t offset = t.at("offset").get<std::size_t>();
      if (offset + 8 * value.size() > payload_bytes)
        throw DataError("tensor '" + t.at("name").get<std::string>()
                        + "' runs past the payload");
      const char *p = all.data() + payload_at + offset;
      for (std::size_t i = 0; i < value.size(); ++i)
        value.data[i] = std::bit_cast<double>(get_le(p + 8 * i));
      c.tensors.emplace_back(t.at("name").get<std::string>(), std::move(value));
    }
  } catch (const Json::exception &e) {
    throw DataError(std::string("malformed checkpoint header: ") + e.what());
  } catch (const UsageError &e) {
    throw DataError(std::string("malformed checkpoint header: ") + e.what());
  }
  return c;
}

void save_checkpoint(const std::string &path, const Checkpoint &ckpt) {
  std::ostringstream os;
  write_checkpoint(os, ckpt);
  write_text_file(path, os.str());
}

Checkpoint load_checkpoint(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw DataError("cannot open checkpoint '" + path + "'");
  try {
    return read_checkpoint(in);
  } catch (const DataError &e) {
    throw DataError(path + ": " + e.what());
  }
}

} // namespace molguide
