// Copyright 2026 The abdsolve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "abd/harness/csv.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "abd/efg/types.h"

namespace abd {

namespace {

bool NeedsQuotes(const std::string& field) {
  return field.find_first_of(",\"\r\n") != std::string::npos;
}

void WriteField(std::ostream& out, const std::string& field) {
  if (!NeedsQuotes(field)) {
    out << field;
    return;
  }
  out << '"';
  for (char c : field) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

void WriteRow(std::ostream& out, const std::vector<std::string>& row) {
  for (size_t i = 0; i < row.size(); ++i) {
    if (i > 0) out << ',';
    WriteField(out, row[i]);
  }
  out << '\n';
}

}  // namespace

int CsvTable::Column(const std::string& name) const {
  for (size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return static_cast<int>(i);
  }
  throw InvalidArgument("no CSV column '" + name + "'");
}

const std::string& CsvTable::At(size_t row, const std::string& name) const {
  if (row >= rows.size()) throw InvalidArgument("CSV row out of range");
  return rows[row][Column(name)];
}

double CsvTable::Number(size_t row, const std::string& name) const {
  const std::string& cell = At(row, name);
  char* end = nullptr;
  double v = std::strtod(cell.c_str(), &end);
  if (cell.empty() || *end != '\0') {
    throw InvalidArgument("CSV cell '" + cell + "' in column '" + name +
                          "' is not a number");
  }
  return v;
}

void WriteCsv(std::ostream& out, const CsvTable& table) {
  WriteRow(out, table.header);
  for (const auto& row : table.rows) {
    if (row.size() != table.header.size()) {
      throw InvalidArgument("CSV row width differs from the header");
    }
    WriteRow(out, row);
  }
}

std::string CsvToString(const CsvTable& table) {
  std::ostringstream out;
  WriteCsv(out, table);
  return out.str();
}

void SaveCsv(const std::string& path, const CsvTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw AbdError("cannot write '" + path + "'");
  WriteCsv(out, table);
  if (!out) throw AbdError("error writing '" + path + "'");
}

CsvTable ParseCsv(const std::string& text, const std::string& source) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  int line = 1;
  int record_line = 1;
  size_t i = 0;
  auto end_record = [&] {
    record.push_back(std::move(field));
    field.clear();
    records.push_back(std::move(record));
    record.clear();
    field_started = false;
  };
  while (i < text.size()) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          i += 2;
          continue;
        }
        quoted = false;
        ++i;
        if (i < text.size() && text[i] != ',' && text[i] != '\n' &&
            text[i] != '\r') {
          throw ParseError(source, line, "text after closing quote");
        }
        continue;
      }
      if (c == '\n') ++line;
      field += c;
      ++i;
      continue;
    }
    if (c == '"') {
      if (field_started) {
        throw ParseError(source, line, "quote inside unquoted field");
      }
      quoted = true;
      field_started = true;
      ++i;
    } else if (c == ',') {
      record.push_back(std::move(field));
      field.clear();
      field_started = false;
      ++i;
    } else if (c == '\r' || c == '\n') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      ++i;
      end_record();
      ++line;
      record_line = line;
    } else {
      field += c;
      field_started = true;
      ++i;
    }
  }
  if (quoted) throw ParseError(source, record_line, "unterminated quote");
  if (field_started || !record.empty()) end_record();
  if (records.empty()) throw ParseError(source, 1, "missing header");
  CsvTable table;
  table.header = std::move(records[0]);
  for (size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != table.header.size()) {
      throw ParseError(source, static_cast<int>(r) + 1,
                       "expected " + std::to_string(table.header.size()) +
                           " fields, got " +
                           std::to_string(records[r].size()));
    }
    table.rows.push_back(std::move(records[r]));
  }
  return table;
}

CsvTable LoadCsv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw AbdError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseCsv(buffer.str(), path);
}

CsvTable DropColumn(const CsvTable& table, const std::string& name) {
  int c = table.Column(name);
  CsvTable out;
  out.header = table.header;
  out.header.erase(out.header.begin() + c);
  for (auto row : table.rows) {
    row.erase(row.begin() + c);
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::string FormatMetric(double value) {
  if (value == 0.0) value = 0.0;  // Drops the sign of -0.
  return FormatProb(value);
}

std::string FormatSeconds(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", seconds);
  return buf;
}

}  // namespace abd
