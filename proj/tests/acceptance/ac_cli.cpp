//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "corpus.hpp"
#include "criteria.hpp"

namespace molguide::acceptance {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path &p, const std::string &text) {
  std::ofstream(p, std::ios::binary) << text;
}

std::map<std::string, std::string> snapshot(const fs::path &dir) {
  std::map<std::string, std::string> files;
  for (const auto &entry: fs::recursive_directory_iterator(dir))
    if (entry.is_regular_file())
      files[fs::relative(entry.path(), dir).string()] = slurp(entry.path());
  return files;
}

struct Command {
  std::string name;
  std::string args;
};

} // namespace

Outcome determinism() {
  const fs::path root = fs::temp_directory_path() / "molguide_acceptance_cli";
  fs::remove_all(root);
  fs::create_directories(root);

  const std::vector<std::string> smiles = testing::curated_smiles();
  std::string train = "# curated\n", drugs, csv = "smiles,HIV_active\n";
  for (std::size_t i = 0; i < smiles.size(); ++i) {
    train += smiles[i] + "\n";
    if (i % 3 == 0)
      drugs += smiles[i] + "\n";
    const bool nitrogen = smiles[i].find_first_of("Nn") != std::string::npos;
    csv += "\"" + smiles[i] + "\"," + (nitrogen ? "1" : "0") + "\n";
  }
  spit(root / "train.smi", train);
  spit(root / "drugs.smi", drugs);
  spit(root / "labeled.csv", csv);
  const fs::path out = root / "out";
  spit(root / "config.json",
       R"({"seed": 3, "diffusion_steps": 12, "clusters": 3,
           "model": {"layers": 1, "node_width": 8, "edge_width": 4, "global_width": 4, "heads": 2},
           "training": {"steps": 12, "batch_size": 2, "learning_rate": 0.002},
           "filter": {"enabled": false}, "checkpoint_every": 5,
           "data": {"train": ")"
           + (root / "train.smi").string() + R"(", "classifier": ")"
           + (root / "labeled.csv").string() + R"(", "heldout_fraction": 0.25},
           "output_dir": ")"
           + out.string() + R"("})");

  const std::string c = " --config " + (root / "config.json").string();
  const std::string r = root.string() + "/";
  const std::string d = out.string() + "/";
  const std::vector<Command> commands {
    { "train-diffusion", c },
    { "train-classifier", c + " --loss bce --denoiser " + d + "denoiser.ckpt" },
    { "train-classifier", c + " --loss mse --out " + d + "classifier_mse.ckpt" },
    { "sample", c + " --checkpoint " + d + "denoiser.ckpt --count 150 --train " + r
                    + "train.smi" },
    { "sample", c + " --checkpoint " + d + "denoiser.ckpt --classifier " + d
                    + "classifier.ckpt --lambda 2 --count 60 --out " + d + "guided.smi" },
    { "sample", c + " --checkpoint " + d + "denoiser.ckpt --classifier " + d
                    + "classifier.ckpt --lambda 0 --count 150 --out " + d + "lambda0.smi" },
    { "screen", c + " --drugs " + r + "drugs.smi --train " + r + "train.smi --generated "
                    + r + "train.smi" },
    { "analyze-degradation", c + " --drugs " + r + "drugs.smi --sources train=" + r
                                 + "train.smi,generated=" + d + "samples.smi" },
    { "fingerprint", c + " --in " + r + "train.smi --radius 2 --width 512" },
    { "dataset-stats", c + " --in " + r + "train.smi" },
  };

  std::vector<std::map<std::string, std::string>> runs;
  std::string failures;
  for (int run = 0; run < 2; ++run) {
    fs::remove_all(out);
    fs::create_directories(out);
    for (std::size_t i = 0; i < commands.size(); ++i) {
      const std::string log = d + "stdout." + std::to_string(i) + ".txt";
      const std::string cmd = std::string(MOLGUIDE_TOOL_PATH) + " " + commands[i].name
                              + commands[i].args + " > " + log + " 2> " + root.string()
                              + "/stderr.txt";
      if (std::system(cmd.c_str()) != 0)
        failures += " " + commands[i].name + "(exit)";
    }
    runs.push_back(snapshot(out));
  }

  std::size_t differing = 0, unheaded = 0;
  for (const auto &[name, bytes]: runs[0]) {
    const auto it = runs[1].find(name);
    if (it == runs[1].end() || it->second != bytes) {
      ++differing;
      failures += " " + name;
    }
    const bool text = name.find(".ckpt") == std::string::npos
                      || name.find(".csv") != std::string::npos;
    if (text && name.rfind("stdout.", 0) != 0 && bytes.rfind("# molguide ", 0) != 0) {
      ++unheaded;
      failures += " " + name + "(header)";
    }
  }
  differing += runs[0].size() != runs[1].size();

  // Unguided and lambda-0 guided samples share the seed and count.
  auto body = [](const std::string &text) {
    std::istringstream is(text);
    std::string line, out;
    while (std::getline(is, line))
      if (line.rfind("#", 0) != 0)
        out += line + "\n";
    return out;
  };
  const bool lambda_zero = body(runs[0]["samples.smi"]) == body(runs[0]["lambda0.smi"])
                           && !runs[0]["samples.smi"].empty();
  const bool full_index = runs[0]["stdout.6.txt"].find("DrugIndex = 100.00%")
                          != std::string::npos;
  if (!lambda_zero)
    failures += " lambda0-body";
  if (!full_index)
    failures += " screen-DrugIndex";

  const bool pass = failures.empty() && differing == 0 && unheaded == 0 && lambda_zero
                    && full_index;
  if (pass)
    fs::remove_all(root);
  return { pass, format("%zu commands, %zu artifacts byte-identical across re-runs; "
                        "lambda 0 = unguided: %s; screen Z=Y prints 100.00%%: %s%s%s",
                        commands.size(), runs[0].size() - differing,
                        lambda_zero ? "yes" : "no", full_index ? "yes" : "no",
                        failures.empty() ? "" : "; failures:", failures.c_str()) };
}

} // namespace molguide::acceptance
