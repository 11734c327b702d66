//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_CLI_CSV_HPP_
#define MOLGUIDE_CLI_CSV_HPP_

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace molguide {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  /// 1-based physical line on which each row starts.
  std::vector<std::size_t> lines;

  std::optional<std::size_t> column(std::string_view name) const;
};

/// RFC 4180: comma separated, double-quoted fields may hold commas, quotes
/// ("" escapes) and line breaks; CRLF or LF line ends. The first record is
/// the header. Throws DataError on an empty input, an unterminated quote or
/// a row whose field count differs from the header.
CsvTable read_csv(std::istream &is);
CsvTable read_csv_file(const std::string &path);

/// Quotes the field only when it contains a comma, quote or line break.
std::string csv_field(std::string_view field);
void write_csv_row(std::ostream &os, const std::vector<std::string> &fields);

} // namespace molguide

#endif // MOLGUIDE_CLI_CSV_HPP_
