//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "molguide/common/error.hpp"
#include "molguide/version.hpp"

namespace {

using namespace molguide;

void add_common(CLI::App *cmd, tool::Common &c, bool seeded = true) {
  cmd->add_option("--config", c.config, "JSON run configuration")
      ->check(CLI::ExistingFile);
  if (seeded)
    cmd->add_option("--seed", c.seed, "Overrides the config seed");
  cmd->add_option("--workers", c.workers, "Overrides the config worker count")
      ->check(CLI::PositiveNumber);
}

int report(ErrorClass cls, const std::string &message) {
  std::cerr << "molguide: error[" << error_class_name(cls) << "]: " << message
            << '\n';
  return static_cast<int>(cls);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app { "Discrete graph diffusion with classifier guidance for "
                 "molecule generation" };
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  tool::TrainDiffusionArgs td;
  auto *cmd = app.add_subcommand("train-diffusion", "Train the denoiser");
  add_common(cmd, td.common);
  cmd->add_option("--out", td.out, "Checkpoint path");
  cmd->callback([&] { tool::train_diffusion(td); });

  tool::TrainClassifierArgs tc;
  cmd = app.add_subcommand("train-classifier", "Train the noisy classifier");
  add_common(cmd, tc.common);
  cmd->add_option("--loss", tc.loss, "Training loss")
      ->check(CLI::IsMember({ "bce", "mse" }));
  cmd->add_option("--denoiser", tc.denoiser,
                  "Denoiser checkpoint supplying the noise schedule and marginals");
  cmd->add_option("--out", tc.out, "Checkpoint path");
  cmd->callback([&] { tool::train_classifier(tc); });

  tool::SampleArgs sa;
  cmd = app.add_subcommand("sample", "Generate molecules");
  add_common(cmd, sa.common);
  cmd->add_option("--checkpoint", sa.checkpoint, "Denoiser checkpoint")
      ->required();
  cmd->add_option("--classifier", sa.classifier, "Classifier checkpoint");
  cmd->add_option("--lambda", sa.lambda, "Guidance scale");
  cmd->add_option("--label", sa.label, "Target label");
  cmd->add_option("--sign", sa.sign, "Guidance sign, +1 or -1");
  cmd->add_option("--count", sa.count, "Number of samples");
  cmd->add_option("--train", sa.train, "Training molecules for novelty");
  cmd->add_option("--out", sa.out, "SMILES output path");
  cmd->callback([&] { tool::sample(sa); });

  tool::ScreenArgs sc;
  cmd = app.add_subcommand("screen", "Similarity screening against drugs");
  add_common(cmd, sc.common, false);
  cmd->add_option("--drugs", sc.drugs, "Known drugs")->required();
  cmd->add_option("--train", sc.train, "Training molecules")
      ->required();
  cmd->add_option("--generated", sc.generated, "Generated molecules")
      ->required();
  cmd->add_option("--out", sc.out, "Per-molecule similarity CSV");
  cmd->callback([&] { tool::screen(sc); });

  tool::DegradationArgs dg;
  cmd = app.add_subcommand("analyze-degradation",
                           "Cluster and substructure comparison of sources");
  add_common(cmd, dg.common);
  cmd->add_option("--drugs", dg.drugs, "Active molecules")
      ->required();
  cmd->add_option("--sources", dg.sources, "NAME=path list, comma separated")
      ->required();
  cmd->add_option("--clusters", dg.clusters, "Cluster count")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out-dir", dg.out_dir, "Report directory");
  cmd->callback([&] { tool::analyze_degradation(dg); });

  tool::FingerprintArgs fp;
  cmd = app.add_subcommand("fingerprint", "Hex Morgan fingerprints");
  add_common(cmd, fp.common, false);
  cmd->add_option("--in", fp.in, "Molecules")->required();
  cmd->add_option("--radius", fp.radius, "Radius")->check(CLI::NonNegativeNumber);
  cmd->add_option("--width", fp.width, "Bit width")->check(CLI::PositiveNumber);
  cmd->add_option("--out", fp.out, "Fingerprint file");
  cmd->callback([&] { tool::fingerprint(fp); });

  tool::DatasetStatsArgs ds;
  cmd = app.add_subcommand("dataset-stats", "Marginals, sizes and filter tally");
  add_common(cmd, ds.common, false);
  cmd->add_option("--in", ds.in, "Molecules")->required();
  cmd->add_option("--out", ds.out, "Statistics CSV");
  cmd->callback([&] { tool::dataset_stats(ds); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    return report(ErrorClass::kUsage, e.what());
  } catch (const Error &e) {
    return report(e.error_class(), e.what());
  } catch (const std::bad_alloc &) {
    return report(ErrorClass::kData, "out of memory");
  } catch (const std::exception &e) {
    return report(ErrorClass::kData, e.what());
  }
  return 0;
}
