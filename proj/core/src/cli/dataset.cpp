//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "molguide/cli/dataset.hpp"

#include <cctype>
#include <charconv>
#include <fstream>

#include "molguide/common/error.hpp"
#include "molguide/molgraph/rings.hpp"
#include "molguide/molgraph/smiles.hpp"
#include "molguide/molgraph/valence.hpp"

namespace molguide {
namespace {
std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return std::string(s);
}

int parse_label(const std::string &text, std::size_t line) {
  const std::string t = trim(text);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw DataError("line " + std::to_string(line) + ": label '" + text
                    + "' is not a number");
  return v != 0.0 ? 1 : 0;
}

/// Adds the molecule or a rejection; returns whether it was accepted.
bool add_molecule(Dataset &out, const std::string &smiles, std::size_t line) {
  try {
    MolecularGraph g = parse_smiles(smiles);
    ValenceReport v = check_valence(g);
    if (!v.valid) {
      out.rejections.push_back({ line, smiles, "valence violation" });
      return false;
    }
    out.molecules.push_back(std::move(g));
    out.smiles.push_back(smiles);
    return true;
  } catch (const DataError &e) {
    out.rejections.push_back({ line, smiles, e.what() });
    return false;
  }
}

std::ifstream open_or_throw(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw DataError("cannot open '" + path + "'");
  return in;
}
} // namespace

Dataset ingest_table(const CsvTable &table, const std::string &smiles_column,
                     const std::optional<std::string> &label_column) {
  const auto s = table.column(smiles_column);
  if (!s)
    throw DataError("CSV has no column '" + smiles_column + "'");
  std::optional<std::size_t> l;
  if (label_column) {
    l = table.column(*label_column);
    if (!l)
      throw DataError("CSV has no column '" + *label_column + "'");
  }
  Dataset out;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto &row = table.rows[r];
    const int label = l ? parse_label(row[*l], table.lines[r]) : 0;
    if (add_molecule(out, trim(row[*s]), table.lines[r]) && l)
      out.labels.push_back(label);
  }
  return out;
}

Dataset ingest_csv(const std::string &path, const std::string &smiles_column,
                   const std::optional<std::string> &label_column) {
  return ingest_table(read_csv_file(path), smiles_column, label_column);
}

Dataset ingest_smiles_lines(std::istream &is) {
  Dataset out;
  std::size_t line = 0;
  for (std::string text; std::getline(is, text);) {
    ++line;
    std::string t = trim(text);
    if (t.empty() || t[0] == '#')
      continue;
    const auto space = t.find_first_of(" \t");
    add_molecule(out, t.substr(0, space), line);
  }
  return out;
}

Dataset ingest_smiles_file(const std::string &path) {
  auto in = open_or_throw(path);
  return ingest_smiles_lines(in);
}

Dataset ingest_molecules(const std::string &path,
                         const std::string &smiles_column) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size()
           && path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".smi") || ends_with(".txt"))
    return ingest_smiles_file(path);
  return ingest_csv(path, smiles_column);
}

void DatasetFilter::validate() const {
  if (!(min_weight <= max_weight))
    throw UsageError("filter weight range is empty");
  if (allowed_elements.empty())
    throw UsageError("filter allows no elements");
}

std::vector<std::size_t> filter_dataset(std::span<const MolecularGraph> molecules,
                                        const DatasetFilter &filter,
                                        FilterTally &tally) {
  filter.validate();
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < molecules.size(); ++i) {
    const MolecularGraph &g = molecules[i];
    ++tally.input;
    if (!g.hydrogens_assigned() && !check_valence(g).valid) {
      ++tally.invalid;
      continue;
    }
    bool elements_ok = true;
    for (Element e: g.atoms())
      elements_ok = elements_ok && filter.allowed_elements.count(e);
    if (!elements_ok) {
      ++tally.element;
      continue;
    }
    if (perceive_rings(g).largest_ring_size() > filter.max_ring_size) {
      ++tally.ring_size;
      continue;
    }
    const double w = (g.hydrogens_assigned() ? g : assign_hydrogens(g))
                         .molecular_weight();
    if (w < filter.min_weight) {
      ++tally.weight_below;
      continue;
    }
    if (w > filter.max_weight) {
      ++tally.weight_above;
      continue;
    }
    ++tally.kept;
    keep.push_back(i);
  }
  return keep;
}

Dataset apply_filter(const Dataset &data, const DatasetFilter &filter,
                     FilterTally &tally) {
  Dataset out;
  out.rejections = data.rejections;
  for (std::size_t i: filter_dataset(data.molecules, filter, tally)) {
    out.molecules.push_back(data.molecules[i]);
    out.smiles.push_back(data.smiles[i]);
    if (!data.labels.empty())
      out.labels.push_back(data.labels[i]);
  }
  return out;
}

} // namespace molguide
