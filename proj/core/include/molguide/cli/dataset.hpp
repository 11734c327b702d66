//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_CLI_DATASET_HPP_
#define MOLGUIDE_CLI_DATASET_HPP_

#include <cstddef>
#include <istream>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "molguide/cli/csv.hpp"
#include "molguide/molgraph/element.hpp"
#include "molguide/molgraph/molecular_graph.hpp"

namespace molguide {

struct Rejection {
  std::size_t line = 0;
  std::string smiles;
  std::string reason;
};

struct Dataset {
  std::vector<MolecularGraph> molecules;
  std::vector<std::string> smiles;
  /// Empty unless a label column was requested.
  std::vector<int> labels;
  std::vector<Rejection> rejections;
};

/// Parses every row's SMILES; rows whose SMILES fails to parse or violates
/// valence are recorded as rejections. Labels must read as an integer or
/// real and are coerced to 1 when nonzero. Throws DataError when a named
/// column is missing or a label is unreadable.
Dataset ingest_table(const CsvTable &table, const std::string &smiles_column,
                     const std::optional<std::string> &label_column = {});
Dataset ingest_csv(const std::string &path, const std::string &smiles_column,
                   const std::optional<std::string> &label_column = {});

/// One SMILES per line; '#' lines and blank lines skipped, text after the
/// first whitespace ignored.
Dataset ingest_smiles_lines(std::istream &is);
Dataset ingest_smiles_file(const std::string &path);

/// .smi and .txt files are read as SMILES lines, anything else as CSV with
/// the given SMILES column.
Dataset ingest_molecules(const std::string &path, const std::string &smiles_column);

struct DatasetFilter {
  double min_weight = 250.0;
  double max_weight = 350.0;
  std::size_t max_ring_size = 8;
  std::set<Element> allowed_elements { kAllElements.begin(), kAllElements.end() };

  /// Throws UsageError if min_weight > max_weight or no element is allowed.
  void validate() const;
};

struct FilterTally {
  std::size_t input = 0;
  std::size_t kept = 0;
  std::size_t weight_below = 0;
  std::size_t weight_above = 0;
  std::size_t element = 0;
  std::size_t ring_size = 0;
  std::size_t invalid = 0;
};

/// Indices of the molecules that pass, in order. A molecule failing several
/// rules is tallied under the first failed rule in the order element, ring
/// size, weight.
std::vector<std::size_t> filter_dataset(std::span<const MolecularGraph> molecules,
                                        const DatasetFilter &filter,
                                        FilterTally &tally);

/// Keeps the passing rows of every per-molecule column of data.
Dataset apply_filter(const Dataset &data, const DatasetFilter &filter,
                     FilterTally &tally);

} // namespace molguide

#endif // MOLGUIDE_CLI_DATASET_HPP_
