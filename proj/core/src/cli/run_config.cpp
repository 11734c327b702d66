//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "molguide/cli/run_config.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "molguide/common/error.hpp"

namespace molguide {
namespace {
using Json = nlohmann::json;

/// Binds the fields of one JSON object and rejects anything unbound.
class ObjectReader {
public:
  ObjectReader(const Json &j, std::string path): j_(j), path_(std::move(path)) {
    if (!j_.is_object())
      throw UsageError("config: '" + label() + "' must be an object");
  }

  template <class T>
  ObjectReader &field(const std::string &key, T &out) {
    known_.push_back(key);
    auto it = j_.find(key);
    if (it == j_.end())
      return *this;
    try {
      if constexpr (std::is_same_v<T, bool>) {
        if (!it->is_boolean())
          throw std::invalid_argument("expected a boolean");
      } else if constexpr (std::is_same_v<T, std::string>) {
        if (!it->is_string())
          throw std::invalid_argument("expected a string");
      } else if constexpr (std::is_floating_point_v<T>) {
        if (!it->is_number())
          throw std::invalid_argument("expected a number");
      } else if constexpr (std::is_integral_v<T>) {
        if (!it->is_number_integer())
          throw std::invalid_argument("expected an integer");
        if (std::is_unsigned_v<T> && it->is_number_integer()
            && !it->is_number_unsigned() && it->template get<long long>() < 0)
          throw std::invalid_argument("expected a non-negative integer");
      }
      out = it->template get<T>();
    } catch (const std::exception &e) {
      throw UsageError("config: '" + label(key) + "': " + e.what());
    }
    return *this;
  }

  ObjectReader &object(const std::string &key,
                       const std::function<void(ObjectReader &)> &bind) {
    known_.push_back(key);
    auto it = j_.find(key);
    if (it == j_.end())
      return *this;
    ObjectReader sub(*it, label(key));
    bind(sub);
    sub.finish();
    return *this;
  }

  ObjectReader &custom(const std::string &key,
                       const std::function<void(const Json &, const std::string &)> &f) {
    known_.push_back(key);
    auto it = j_.find(key);
    if (it != j_.end())
      f(*it, label(key));
    return *this;
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it)
      if (std::find(known_.begin(), known_.end(), it.key()) == known_.end())
        throw UsageError("config: unknown field '" + label(it.key()) + "'");
  }

private:
  std::string label(const std::string &key = "") const {
    if (key.empty())
      return path_.empty() ? "<root>" : path_;
    return path_.empty() ? key : path_ + "." + key;
  }

  const Json &j_;
  std::string path_;
  std::vector<std::string> known_;
};

void bind_fingerprint(ObjectReader &r, FingerprintParams &p) {
  r.field("radius", p.radius).field("width", p.width);
}
} // namespace

void RunConfig::validate() const {
  if (diffusion_steps < 1)
    throw UsageError("config: diffusion_steps must be at least 1");
  if (!(lambda_edge >= 0.0))
    throw UsageError("config: lambda_edge must be non-negative");
  model.validate();
  TrainConfig t = training;
  t.lambda_edge = lambda_edge;
  t.validate();
  guidance.validate();
  for (const FingerprintParams *p: { &screening, &clustering })
    if (p->radius < 0 || p->width < 64 || (p->width & (p->width - 1)) != 0)
      throw UsageError("config: fingerprint width must be a power of two >= 64 "
                       "and radius non-negative");
  if (clusters == 0)
    throw UsageError("config: clusters must be positive");
  filter.validate();
  if (!(data.heldout_fraction >= 0.0 && data.heldout_fraction < 1.0))
    throw UsageError("config: data.heldout_fraction must be in [0, 1)");
  if (workers == 0)
    throw UsageError("config: workers must be positive");
}

RunConfig parse_run_config(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error &e) {
    throw UsageError(std::string("config: invalid JSON: ") + e.what());
  }
  RunConfig c;
  ObjectReader root(j, "");
  root.field("seed", c.seed)
      .field("diffusion_steps", c.diffusion_steps)
      .field("lambda_edge", c.lambda_edge)
      .object("model", [&](ObjectReader &r) {
        r.field("layers", c.model.layers)
            .field("node_width", c.model.node_width)
            .field("edge_width", c.model.edge_width)
            .field("global_width", c.model.global_width)
            .field("heads", c.model.heads)
            .field("dropout", c.model.dropout);
      })
      .object("training", [&](ObjectReader &r) {
        r.field("steps", c.training.steps)
            .field("batch_size", c.training.batch_size)
            .field("learning_rate", c.training.adam.learning_rate)
            .field("beta1", c.training.adam.beta1)
            .field("beta2", c.training.adam.beta2)
            .field("epsilon", c.training.adam.epsilon);
      })
      .object("guidance", [&](ObjectReader &r) {
        r.field("lambda", c.guidance.lambda)
            .field("sign", c.guidance.sign)
            .field("target_label", c.guidance.target_label);
      })
      .object("fingerprints", [&](ObjectReader &r) {
        r.object("screening", [&](ObjectReader &s) { bind_fingerprint(s, c.screening); })
            .object("clustering", [&](ObjectReader &s) { bind_fingerprint(s, c.clustering); });
      })
      .field("clusters", c.clusters)
      .object("filter", [&](ObjectReader &r) {
        r.field("enabled", c.filter_enabled)
            .field("min_weight", c.filter.min_weight)
            .field("max_weight", c.filter.max_weight)
            .field("max_ring_size", c.filter.max_ring_size)
            .custom("elements", [&](const Json &v, const std::string &where) {
              if (!v.is_array())
                throw UsageError("config: '" + where + "' must be an array");
              c.filter.allowed_elements.clear();
              for (const Json &e: v) {
                auto el = e.is_string() ? element_from_symbol(e.get<std::string>())
                                        : std::nullopt;
                if (!el)
                  throw UsageError("config: '" + where + "' holds an unknown element "
                                   + e.dump());
                c.filter.allowed_elements.insert(*el);
              }
            });
      })
      .object("data", [&](ObjectReader &r) {
        r.field("train", c.data.train)
            .field("classifier", c.data.classifier)
            .field("smiles_column", c.data.smiles_column)
            .field("label_column", c.data.label_column)
            .field("heldout_fraction", c.data.heldout_fraction);
      })
      .field("output_dir", c.output_dir)
      .field("workers", c.workers)
      .field("checkpoint_every", c.checkpoint_every);
  root.finish();
  c.training.lambda_edge = c.lambda_edge;
  c.validate();
  return c;
}

RunConfig load_run_config(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw UsageError("cannot open config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str());
}

std::string run_config_json(const RunConfig &c) {
  Json elements = Json::array();
  for (Element e: c.filter.allowed_elements)
    elements.push_back(std::string(element_symbol(e)));
  Json j = {
    { "seed", c.seed },
    { "diffusion_steps", c.diffusion_steps },
    { "lambda_edge", c.lambda_edge },
    { "model",
      { { "layers", c.model.layers },
        { "node_width", c.model.node_width },
        { "edge_width", c.model.edge_width },
        { "global_width", c.model.global_width },
        { "heads", c.model.heads },
        { "dropout", c.model.dropout } } },
    { "training",
      { { "steps", c.training.steps },
        { "batch_size", c.training.batch_size },
        { "learning_rate", c.training.adam.learning_rate },
        { "beta1", c.training.adam.beta1 },
        { "beta2", c.training.adam.beta2 },
        { "epsilon", c.training.adam.epsilon } } },
    { "guidance",
      { { "lambda", c.guidance.lambda },
        { "sign", c.guidance.sign },
        { "target_label", c.guidance.target_label } } },
    { "fingerprints",
      { { "screening", { { "radius", c.screening.radius }, { "width", c.screening.width } } },
        { "clustering", { { "radius", c.clustering.radius }, { "width", c.clustering.width } } } } },
    { "clusters", c.clusters },
    { "filter",
      { { "enabled", c.filter_enabled },
        { "min_weight", c.filter.min_weight },
        { "max_weight", c.filter.max_weight },
        { "max_ring_size", c.filter.max_ring_size },
        { "elements", elements } } },
    { "data",
      { { "train", c.data.train },
        { "classifier", c.data.classifier },
        { "smiles_column", c.data.smiles_column },
        { "label_column", c.data.label_column },
        { "heldout_fraction", c.data.heldout_fraction } } },
    { "output_dir", c.output_dir },
    { "workers", c.workers },
    { "checkpoint_every", c.checkpoint_every },
  };
  return j.dump();
}

} // namespace molguide
