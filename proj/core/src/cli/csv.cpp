//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "molguide/cli/csv.hpp"

#include <fstream>

#include "molguide/common/error.hpp"

namespace molguide {

std::optional<std::size_t> CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name)
      return i;
  return std::nullopt;
}

CsvTable read_csv(std::istream &is) {
  CsvTable table;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false, field_started = false, any = false;
  std::size_t line = 1, record_line = 1, quote_line = 0;

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    if (table.header.empty()) {
      table.header = std::move(record);
      if (!table.header.empty() && table.header[0].rfind("\xEF\xBB\xBF", 0) == 0)
        table.header[0].erase(0, 3);
    } else if (record.size() == 1 && record[0].empty()) {
      // Blank line.
    } else {
      if (record.size() != table.header.size())
        throw DataError("CSV line " + std::to_string(record_line) + " has "
                        + std::to_string(record.size()) + " fields, header has "
                        + std::to_string(table.header.size()));
      table.rows.push_back(std::move(record));
      table.lines.push_back(record_line);
    }
    record.clear();
  };

  for (char c; is.get(c);) {
    any = true;
    if (quoted) {
      if (c == '"') {
        if (is.peek() == '"') {
          is.get();
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n')
          ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
    case '"':
      if (field_started)
        throw DataError("CSV line " + std::to_string(line)
                        + ": quote inside an unquoted field");
      quoted = field_started = true;
      quote_line = line;
      break;
    case ',':
      end_field();
      break;
    case '\r':
      if (is.peek() != '\n')
        field += c;
      break;
    case '\n':
      end_record();
      record_line = ++line;
      break;
    default:
      field += c;
      field_started = true;
    }
  }
  if (quoted)
    throw DataError("CSV quote opened on line " + std::to_string(quote_line)
                    + " is never closed");
  if (!field.empty() || !record.empty() || field_started)
    end_record();
  if (!any || table.header.empty())
    throw DataError("CSV input is empty");
  return table;
}

CsvTable read_csv_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw DataError("cannot open '" + path + "'");
  try {
    return read_csv(in);
  } catch (const DataError &e) {
    throw DataError(path + ": " + e.what());
  }
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos)
    return std::string(field);
  std::string out = "\"";
  for (char c: field) {
    if (c == '"')
      out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_csv_row(std::ostream &os, const std::vector<std::string> &fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i)
      os << ',';
    os << csv_field(fields[i]);
  }
  os << '\n';
}

} // namespace molguide
