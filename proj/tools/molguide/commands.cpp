//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <vector>

#include "molguide/analysis/degradation.hpp"
#include "molguide/chem/fingerprint.hpp"
#include "molguide/chem/similarity.hpp"
#include "molguide/cli/artifact.hpp"
#include "molguide/cli/checkpoint.hpp"
#include "molguide/cli/csv.hpp"
#include "molguide/cli/dataset.hpp"
#include "molguide/cli/metrics.hpp"
#include "molguide/cli/run_config.hpp"
#include "molguide/common/error.hpp"
#include "molguide/common/rng.hpp"
#include "molguide/diffusion/sampler.hpp"
#include "molguide/guidance/classifier.hpp"
#include "molguide/guidance/guided_sampler.hpp"
#include "molguide/molgraph/canonical.hpp"
#include "molguide/molgraph/valence.hpp"
#include "molguide/neural/training.hpp"
#include "molguide/version.hpp"

namespace molguide::tool {
namespace {

// Stream indices under the run seed.
constexpr std::uint64_t kInitStream = 0;
constexpr std::uint64_t kTrainStream = 1;
constexpr std::uint64_t kSplitStream = 2;
constexpr std::uint64_t kBalanceStream = 3;
constexpr std::uint64_t kEvalStream = 4;

constexpr std::size_t kMaxLoggedRejections = 20;

std::string num(double v, int precision = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return Rng::stream(seed, stream).next_u64();
}

RunConfig resolve_config(const Common &c, const std::string &fallback_json = "") {
  RunConfig cfg;
  if (!c.config.empty())
    cfg = load_run_config(c.config);
  else if (!fallback_json.empty())
    cfg = parse_run_config(fallback_json);
  if (c.seed)
    cfg.seed = *c.seed;
  if (c.workers)
    cfg.workers = *c.workers;
  cfg.validate();
  return cfg;
}

void log_rejections(const std::string &path, const Dataset &data) {
  std::size_t shown = 0;
  for (const Rejection &r: data.rejections) {
    if (shown++ == kMaxLoggedRejections) {
      std::cerr << "molguide: warning: " << path << ": "
                << data.rejections.size() - kMaxLoggedRejections
                << " more rejected rows\n";
      break;
    }
    std::cerr << "molguide: warning: " << path << ":" << r.line
              << ": rejected '" << r.smiles << "': " << r.reason << '\n';
  }
}

void log_tally(const std::string &path, const FilterTally &t) {
  std::cerr << "molguide: " << path << ": filter kept " << t.kept << " of "
            << t.input << " (weight below " << t.weight_below << ", above "
            << t.weight_above << ", element " << t.element << ", ring size "
            << t.ring_size << ", invalid " << t.invalid << ")\n";
}

Dataset load_molecules(const std::string &path, const RunConfig &cfg,
                       bool filtered) {
  Dataset data = ingest_molecules(path, cfg.data.smiles_column);
  log_rejections(path, data);
  if (filtered && cfg.filter_enabled) {
    FilterTally tally;
    data = apply_filter(data, cfg.filter, tally);
    log_tally(path, tally);
  }
  if (data.molecules.empty())
    throw DataError(path + ": no usable molecules");
  return data;
}

std::vector<OneHotGraph> to_graphs(const std::vector<MolecularGraph> &mols) {
  std::vector<OneHotGraph> out;
  out.reserve(mols.size());
  for (const MolecularGraph &g: mols)
    out.push_back(OneHotGraph::from_molecule(g));
  return out;
}

std::string require_path(const std::string &path, const char *what) {
  if (path.empty())
    throw UsageError(std::string("config: ") + what + " is required");
  return path;
}

Checkpoint make_checkpoint(const GraphTransformer &model, const RunConfig &cfg,
                           const NoiseSchedule &schedule, double cosine_offset,
                           const Marginals &marginals,
                           std::vector<double> node_counts,
                           std::uint64_t init_seed, std::size_t steps) {
  Checkpoint c;
  c.head = model.head();
  c.space = model.space();
  c.model = cfg.model;
  c.init_seed = init_seed;
  c.diffusion_steps = schedule.T;
  c.cosine_offset = cosine_offset;
  c.marginals = marginals;
  c.node_count_weights = std::move(node_counts);
  c.lambda_edge = cfg.lambda_edge;
  c.lambda_guidance = cfg.guidance.lambda;
  c.trained_steps = steps;
  c.config_json = run_config_json(cfg);
  c.tool_version = std::string(kVersion);
  c.tensors = model.params().snapshot();
  return c;
}

// Saves an intermediate checkpoint every checkpoint_every steps.
StepCallback periodic_saver(const RunConfig &cfg, const std::string &out,
                            const std::function<Checkpoint(std::size_t)> &make) {
  if (cfg.checkpoint_every == 0)
    return {};
  return [&cfg, out, make](std::size_t step, double) {
    const std::size_t done = step + 1;
    if (done % cfg.checkpoint_every == 0 && done < cfg.training.steps)
      save_checkpoint(out + ".step" + std::to_string(done), make(done));
  };
}

std::string loss_log(const std::string &command, const RunConfig &cfg,
                     const ArtifactParams &params,
                     const std::vector<double> &trace) {
  std::ostringstream os;
  os << artifact_header(command, cfg, params) << "step,loss\n";
  for (std::size_t i = 0; i < trace.size(); ++i)
    os << i + 1 << ',' << num(trace[i]) << '\n';
  return os.str();
}

std::vector<int> eval_timesteps(int T) {
  std::set<int> ts { 1, T };
  for (int q = 1; q < 4; ++q)
    ts.insert(std::max(1, T * q / 4));
  return { ts.begin(), ts.end() };
}

// Stratified: round(fraction * class size) items of each class held out.
void split_heldout(const std::vector<LabeledGraph> &all, double fraction,
                   std::uint64_t seed, std::vector<LabeledGraph> &train,
                   std::vector<LabeledGraph> &heldout) {
  Rng rng(seed);
  for (int label: { 0, 1 }) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (all[i].label == label)
        idx.push_back(i);
    rng.shuffle(idx.begin(), idx.end());
    const auto held = static_cast<std::size_t>(
        fraction * static_cast<double>(idx.size()) + 0.5);
    for (std::size_t k = 0; k < idx.size(); ++k)
      (k < held ? heldout : train).push_back(all[idx[k]]);
  }
}

std::set<std::string> canonical_set(const Dataset &data) {
  std::set<std::string> out;
  for (const MolecularGraph &g: data.molecules)
    out.insert(canonical_key(g));
  return out;
}

std::vector<Fingerprint> fingerprints_of(const Dataset &data,
                                         FingerprintParams p,
                                         std::size_t workers) {
  return morgan_fingerprints(data.molecules, p.radius, p.width, workers);
}

std::vector<NamedSource> parse_sources(const std::string &spec,
                                       const RunConfig &cfg) {
  std::vector<NamedSource> out;
  std::set<std::string> names;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw UsageError("--sources: expected NAME=path, got '" + item + "'");
    std::string name = item.substr(0, eq);
    if (!names.insert(name).second)
      throw UsageError("--sources: duplicate name '" + name + "'");
    const std::string path = item.substr(eq + 1);
    Dataset data = ingest_molecules(path, cfg.data.smiles_column);
    log_rejections(path, data);
    out.push_back({ std::move(name), std::move(data.molecules) });
  }
  if (out.empty())
    throw UsageError("--sources: no sources given");
  return out;
}

} // namespace

void train_diffusion(const TrainDiffusionArgs &args) {
  const RunConfig cfg = resolve_config(args.common);
  const std::string train_path = require_path(cfg.data.train, "data.train");
  const std::string out = args.out.empty() ? join_path(cfg.output_dir, "denoiser.ckpt")
                                           : args.out;

  const Dataset data = load_molecules(train_path, cfg, true);
  const std::vector<OneHotGraph> graphs = to_graphs(data.molecules);
  const NoiseSchedule schedule = NoiseSchedule::cosine(cfg.diffusion_steps);
  const Marginals marginals = estimate_marginals(graphs, StateSpace::molecules());
  const TransitionModel transitions = build_transitions(schedule, marginals);
  const NodeCountDistribution sizes = NodeCountDistribution::from_dataset(graphs);
  const std::vector<double> node_counts(sizes.weights().begin(),
                                        sizes.weights().end());

  const std::uint64_t init_seed = derive_seed(cfg.seed, kInitStream);
  GraphTransformer model(cfg.model, StateSpace::molecules(), ModelHead::kDenoiser,
                         init_seed);
  TrainConfig tc = cfg.training;
  tc.lambda_edge = cfg.lambda_edge;

  auto make = [&](std::size_t steps) {
    return make_checkpoint(model, cfg, schedule, kCosineOffset, marginals,
                           node_counts,
                           init_seed, steps);
  };
  const std::vector<double> trace = train_diffusion(
      model, transitions, graphs, tc, derive_seed(cfg.seed, kTrainStream),
      periodic_saver(cfg, out, make));

  save_checkpoint(out, make(trace.size()));
  const ArtifactParams params { { "train", train_path },
                                { "molecules", std::to_string(graphs.size()) } };
  write_text_file(out + ".loss.csv", loss_log("train-diffusion", cfg, params, trace));
  std::cout << "trained denoiser on " << graphs.size() << " molecules, final loss "
            << num(trace.empty() ? 0.0 : trace.back(), 6) << '\n';
}

void train_classifier(const TrainClassifierArgs &args) {
  const RunConfig cfg = resolve_config(args.common);
  const ClassifierLoss loss = parse_classifier_loss(args.loss);
  const std::string path = require_path(cfg.data.classifier, "data.classifier");
  const std::string out = args.out.empty() ? join_path(cfg.output_dir,
                                                       "classifier.ckpt")
                                           : args.out;

  Dataset data = ingest_csv(path, cfg.data.smiles_column, cfg.data.label_column);
  log_rejections(path, data);
  if (cfg.filter_enabled) {
    FilterTally tally;
    data = apply_filter(data, cfg.filter, tally);
    log_tally(path, tally);
  }
  if (data.molecules.empty())
    throw DataError(path + ": no usable molecules");
  const std::vector<OneHotGraph> graphs = to_graphs(data.molecules);

  NoiseSchedule schedule = NoiseSchedule::cosine(cfg.diffusion_steps);
  double cosine_offset = kCosineOffset;
  Marginals marginals;
  if (!args.denoiser.empty()) {
    const Checkpoint den = load_checkpoint(args.denoiser);
    if (den.head != ModelHead::kDenoiser)
      throw UsageError("--denoiser: '" + args.denoiser + "' is not a denoiser");
    schedule = den.schedule();
    cosine_offset = den.cosine_offset;
    marginals = den.marginals;
  } else {
    marginals = estimate_marginals(graphs, StateSpace::molecules());
  }
  const TransitionModel transitions = build_transitions(schedule, marginals);

  std::vector<LabeledGraph> all;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    all.push_back({ graphs[i], data.labels[i] });
  std::vector<LabeledGraph> train, heldout;
  split_heldout(all, cfg.data.heldout_fraction, derive_seed(cfg.seed, kSplitStream),
                train, heldout);
  Rng balance_rng = Rng::stream(cfg.seed, kBalanceStream);
  const std::vector<LabeledGraph> balanced = upsample_balance(train, balance_rng);

  const std::uint64_t init_seed = derive_seed(cfg.seed, kInitStream);
  GraphTransformer model(cfg.model, StateSpace::molecules(), ModelHead::kClassifier,
                         init_seed);
  ClassifierTrainConfig cc;
  cc.steps = cfg.training.steps;
  cc.batch_size = cfg.training.batch_size;
  cc.adam = cfg.training.adam;
  cc.loss = loss;

  const NodeCountDistribution sizes = NodeCountDistribution::from_dataset(graphs);
  const std::vector<double> node_counts(sizes.weights().begin(),
                                        sizes.weights().end());
  auto make = [&](std::size_t steps) {
    Checkpoint c = make_checkpoint(model, cfg, schedule, cosine_offset, marginals,
                                   node_counts, init_seed, steps);
    c.loss = loss;
    return c;
  };
  const std::vector<double> trace = train_classifier(
      model, transitions, balanced, cc, derive_seed(cfg.seed, kTrainStream),
      periodic_saver(cfg, out, make));
  save_checkpoint(out, make(trace.size()));

  ArtifactParams params { { "classifier", path },
                          { "loss", std::string(classifier_loss_name(loss)) },
                          { "denoiser", args.denoiser },
                          { "train_items", std::to_string(train.size()) },
                          { "balanced_items", std::to_string(balanced.size()) },
                          { "heldout_items", std::to_string(heldout.size()) } };
  write_text_file(out + ".loss.csv", loss_log("train-classifier", cfg, params, trace));

  const bool both = std::any_of(heldout.begin(), heldout.end(),
                                [](const LabeledGraph &g) { return g.label == 1; })
                    && std::any_of(heldout.begin(), heldout.end(),
                                   [](const LabeledGraph &g) { return g.label == 0; });
  if (both) {
    const std::vector<int> ts = eval_timesteps(schedule.T);
    const auto strata = evaluate_by_timestep(model, transitions, heldout, ts,
                                             derive_seed(cfg.seed, kEvalStream));
    std::ostringstream os;
    os << artifact_header("train-classifier", cfg, params) << "t,auc,accuracy\n";
    for (const StratumMetrics &m: strata)
      os << m.t << ',' << fixed(m.auc, 6) << ',' << fixed(m.accuracy, 6) << '\n';
    write_text_file(out + ".eval.csv", os.str());
  } else {
    std::cerr << "molguide: warning: held-out split lacks a class; skipping "
                 "evaluation\n";
  }
  std::cout << "trained " << classifier_loss_name(loss) << " classifier on "
            << balanced.size() << " balanced items, final loss "
            << num(trace.empty() ? 0.0 : trace.back(), 6) << '\n';
}

void sample(const SampleArgs &args) {
  const Checkpoint den = load_checkpoint(args.checkpoint);
  if (den.head != ModelHead::kDenoiser)
    throw UsageError("--checkpoint: '" + args.checkpoint + "' is not a denoiser");
  const RunConfig cfg = resolve_config(args.common, den.config_json);
  const std::string out = args.out.empty() ? join_path(cfg.output_dir, "samples.smi")
                                           : args.out;
  if (args.count == 0)
    throw UsageError("--count must be positive");

  const GraphTransformer model = den.instantiate();
  const TransitionModel transitions = den.transitions();
  const NeuralDenoiser denoiser(model);
  const NodeCountDistribution sizes(den.node_count_weights);

  GuidanceConfig guidance = cfg.guidance;
  if (args.lambda)
    guidance.lambda = *args.lambda;
  if (args.label)
    guidance.target_label = *args.label;
  if (args.sign)
    guidance.sign = *args.sign;
  guidance.validate();

  std::optional<Checkpoint> cls_ckpt;
  std::unique_ptr<GraphTransformer> classifier;
  std::unique_ptr<ClassifierGuidance> hook;
  if (!args.classifier.empty()) {
    cls_ckpt = load_checkpoint(args.classifier);
    if (cls_ckpt->head != ModelHead::kClassifier || !cls_ckpt->loss)
      throw UsageError("--classifier: '" + args.classifier
                       + "' is not a classifier checkpoint");
    if (cls_ckpt->diffusion_steps != den.diffusion_steps)
      throw UsageError("--classifier: trained for T = "
                       + std::to_string(cls_ckpt->diffusion_steps)
                       + " but the denoiser uses T = "
                       + std::to_string(den.diffusion_steps));
    classifier = std::make_unique<GraphTransformer>(cls_ckpt->instantiate());
    hook = std::make_unique<ClassifierGuidance>(*classifier, *cls_ckpt->loss,
                                                den.diffusion_steps, guidance);
  } else if (args.lambda && *args.lambda != 0.0) {
    throw UsageError("--lambda requires --classifier");
  }

  const std::vector<OneHotGraph> graphs = sample_batch(
      denoiser, transitions, sizes, args.count, cfg.seed, hook.get(), cfg.workers);

  std::vector<std::string> smiles;
  smiles.reserve(graphs.size());
  for (const OneHotGraph &g: graphs) {
    const MolecularGraph mol = g.to_molecule();
    smiles.push_back(!mol.empty() && check_valence(mol).valid
                         ? canonical_key(mol)
                         : std::string());
  }
  std::set<std::string> training;
  if (!args.train.empty())
    training = canonical_set(load_molecules(args.train, cfg, false));
  const GenerationMetrics m = generation_metrics(smiles, training);

  ArtifactParams params { { "checkpoint", args.checkpoint },
                          { "classifier", args.classifier },
                          { "lambda", hook ? num(guidance.lambda, 17) : "0" },
                          { "label", std::to_string(guidance.target_label) },
                          { "sign", std::to_string(guidance.sign) },
                          { "count", std::to_string(args.count) },
                          { "seed", std::to_string(cfg.seed) },
                          { "train", args.train } };
  std::ostringstream smi;
  smi << artifact_header("sample", cfg, params);
  for (const std::string &s: smiles)
    if (!s.empty())
      smi << s << '\n';
  write_text_file(out, smi.str());

  std::ostringstream rep;
  rep << artifact_header("sample", cfg, params) << "metric,value\n"
      << "total," << m.total << '\n'
      << "valid_count," << m.valid_count << '\n'
      << "unique_count," << m.unique_count << '\n'
      << "valid," << fixed(m.valid, 6) << '\n'
      << "unique," << fixed(m.unique, 6) << '\n';
  if (args.train.empty())
    rep << "novel_count,NA\nnovel,NA\n";
  else
    rep << "novel_count," << m.novel_count << "\nnovel," << fixed(m.novel, 6)
        << '\n';
  write_text_file(out + ".report.csv", rep.str());
  std::cout << "sampled " << m.total << ": valid " << fixed(100.0 * m.valid, 2)
            << "%, unique " << fixed(100.0 * m.unique, 2) << "%";
  if (!args.train.empty())
    std::cout << ", novel " << fixed(100.0 * m.novel, 2) << "%";
  std::cout << '\n';
}

void screen(const ScreenArgs &args) {
  const RunConfig cfg = resolve_config(args.common);
  const std::string out = args.out.empty() ? join_path(cfg.output_dir, "screen.csv")
                                           : args.out;
  const Dataset drugs = load_molecules(args.drugs, cfg, false);
  const Dataset train = load_molecules(args.train, cfg, false);
  const Dataset generated = load_molecules(args.generated, cfg, false);

  const auto fp_drugs = fingerprints_of(drugs, cfg.screening, cfg.workers);
  const auto fp_train = fingerprints_of(train, cfg.screening, cfg.workers);
  const auto fp_gen = fingerprints_of(generated, cfg.screening, cfg.workers);
  const double like_gen = drug_like(fp_drugs, fp_gen, kDrugLikeThreshold, cfg.workers);
  const double like_train = drug_like(fp_drugs, fp_train, kDrugLikeThreshold,
                                      cfg.workers);
  std::string index = "NA";
  try {
    index = fixed(drug_index(fp_drugs, fp_train, fp_gen, kDrugLikeThreshold,
                             cfg.workers),
                  2)
            + "%";
  } catch (const NumericError &e) {
    std::cerr << "molguide: warning: " << e.what() << '\n';
  }

  const ArtifactParams params { { "drugs", args.drugs },
                                { "train", args.train },
                                { "generated", args.generated } };
  std::ostringstream csv;
  csv << artifact_header("screen", cfg, params);
  write_csv_row(csv, { "set", "index", "smiles", "best_similarity" });
  auto emit = [&](const char *set, const Dataset &data,
                  const std::vector<Fingerprint> &fps) {
    const auto best = best_similarities(fp_drugs, fps, cfg.workers);
    for (std::size_t i = 0; i < best.size(); ++i)
      write_csv_row(csv, { set, std::to_string(i), data.smiles[i], fixed(best[i], 6) });
  };
  emit("train", train, fp_train);
  emit("generated", generated, fp_gen);
  write_text_file(out, csv.str());

  std::ostringstream summary;
  summary << "DrugLike(drugs, generated) = " << fixed(like_gen, 6) << '\n'
          << "DrugLike(drugs, train) = " << fixed(like_train, 6) << '\n'
          << "DrugIndex = " << index << '\n';
  write_text_file(out + ".summary.txt",
                  artifact_header("screen", cfg, params) + summary.str());
  std::cout << summary.str();
}

void analyze_degradation(const DegradationArgs &args) {
  const RunConfig cfg = resolve_config(args.common);
  const std::string dir = args.out_dir.empty() ? cfg.output_dir : args.out_dir;
  const std::size_t k = args.clusters.value_or(cfg.clusters);
  const Dataset actives = load_molecules(args.drugs, cfg, false);
  const std::vector<NamedSource> sources = parse_sources(args.sources, cfg);

  const ActiveReference ref = build_active_reference(
      actives.molecules, k, cfg.seed, cfg.workers, cfg.screening, cfg.clustering);
  const DegradationReport report = cluster_table(sources, ref, cfg.workers);

  const ArtifactParams params { { "drugs", args.drugs },
                                { "sources", args.sources },
                                { "clusters", std::to_string(k) } };
  const std::string header = artifact_header("analyze-degradation", cfg, params);
  std::ostringstream clusters, proportions, summary;
  write_cluster_csv(clusters, report);
  write_proportion_csv(proportions, report);
  write_summary(summary, report);
  write_text_file(join_path(dir, "degradation_clusters.csv"), header + clusters.str());
  write_text_file(join_path(dir, "degradation_fused56.csv"), header + proportions.str());
  write_text_file(join_path(dir, "degradation_summary.txt"), header + summary.str());
  std::cout << summary.str();
}

void fingerprint(const FingerprintArgs &args) {
  const RunConfig cfg = resolve_config(args.common);
  FingerprintParams p = cfg.screening;
  if (args.radius)
    p.radius = *args.radius;
  if (args.width)
    p.width = *args.width;
  if (p.width % 64 != 0)
    throw UsageError("--width must be a multiple of 64");
  const std::string out = args.out.empty() ? join_path(cfg.output_dir,
                                                       "fingerprints.txt")
                                           : args.out;
  const Dataset data = load_molecules(args.in, cfg, false);
  const auto fps = fingerprints_of(data, p, cfg.workers);
  const ArtifactParams params { { "in", args.in },
                                { "radius", std::to_string(p.radius) },
                                { "width", std::to_string(p.width) } };
  std::ostringstream os;
  os << artifact_header("fingerprint", cfg, params);
  write_fingerprints(os, fps, data.smiles);
  write_text_file(out, os.str());
  std::cout << "wrote " << fps.size() << " fingerprints\n";
}

void dataset_stats(const DatasetStatsArgs &args) {
  const RunConfig cfg = resolve_config(args.common);
  const std::string out = args.out.empty() ? join_path(cfg.output_dir,
                                                       "dataset_stats.csv")
                                           : args.out;
  const Dataset raw = load_molecules(args.in, cfg, false);
  FilterTally tally;
  const Dataset kept = apply_filter(raw, cfg.filter, tally);
  const std::vector<OneHotGraph> graphs = to_graphs(raw.molecules);
  const Marginals marginals = estimate_marginals(graphs, StateSpace::molecules());
  const NodeCountDistribution sizes = NodeCountDistribution::from_dataset(graphs);

  const ArtifactParams params { { "in", args.in } };
  std::ostringstream os;
  os << artifact_header("dataset-stats", cfg, params);
  write_csv_row(os, { "section", "key", "value" });
  os << "ingest,rows," << raw.molecules.size() + raw.rejections.size() << '\n'
     << "ingest,molecules," << raw.molecules.size() << '\n'
     << "ingest,rejected," << raw.rejections.size() << '\n';
  for (std::size_t c = 0; c < marginals.node.size(); ++c)
    os << "node_marginal," << element_symbol(kAllElements[c]) << ','
       << fixed(marginals.node[c], 6) << '\n';
  static constexpr const char *kEdgeNames[] = { "none", "single", "double",
                                                "triple", "aromatic" };
  for (std::size_t c = 0; c < marginals.edge.size(); ++c)
    os << "edge_marginal," << kEdgeNames[c] << ',' << fixed(marginals.edge[c], 6)
       << '\n';
  for (std::size_t n = 0; n < sizes.weights().size(); ++n)
    if (sizes.weights()[n] > 0)
      os << "node_count," << n << ',' << static_cast<std::size_t>(sizes.weights()[n])
         << '\n';
  os << "filter,input," << tally.input << '\n'
     << "filter,kept," << tally.kept << '\n'
     << "filter,weight_below," << tally.weight_below << '\n'
     << "filter,weight_above," << tally.weight_above << '\n'
     << "filter,element," << tally.element << '\n'
     << "filter,ring_size," << tally.ring_size << '\n'
     << "filter,invalid," << tally.invalid << '\n';
  write_text_file(out, os.str());
  std::cout << raw.molecules.size() << " molecules, " << kept.molecules.size()
            << " pass the filter\n";
}

} // namespace molguide::tool
