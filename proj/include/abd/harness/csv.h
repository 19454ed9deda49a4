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

#ifndef ABD_HARNESS_CSV_H_
#define ABD_HARNESS_CSV_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace abd {

// A header and rows of raw fields. Fields containing a comma, a quote or a
// line break are quoted on output, with quotes doubled.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Index of a header column; throws InvalidArgument if absent.
  int Column(const std::string& name) const;
  const std::string& At(size_t row, const std::string& name) const;
  double Number(size_t row, const std::string& name) const;
};

void WriteCsv(std::ostream& out, const CsvTable& table);
std::string CsvToString(const CsvTable& table);
void SaveCsv(const std::string& path, const CsvTable& table);

// Throws ParseError naming `source` and the line on malformed input or a row
// whose width differs from the header.
CsvTable ParseCsv(const std::string& text, const std::string& source);
CsvTable LoadCsv(const std::string& path);

// Copy of `table` without the named column.
CsvTable DropColumn(const CsvTable& table, const std::string& name);

// Metric cells use 12 significant digits, runtimes microseconds.
std::string FormatMetric(double value);
std::string FormatSeconds(double seconds);

}  // namespace abd

#endif  // ABD_HARNESS_CSV_H_
