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

#include "abd/harness/experiment_config.h"

#include <cstdlib>
#include <sstream>

#include "abd/efg/types.h"

namespace abd {

namespace {

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t b = item.find_first_not_of(" \t");
    size_t e = item.find_last_not_of(" \t");
    parts.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return parts;
}

int PositiveInt(const ConfigEntry& e, const std::string& source, int min) {
  int v = ParseIntValue(e, source);
  if (v < min) {
    throw ParseError(source, e.line,
                     e.key + " = " + e.value + " violates " + e.key +
                         " >= " + std::to_string(min));
  }
  return v;
}

std::vector<int> IntList(const ConfigEntry& e, const std::string& source,
                         int min) {
  std::vector<int> out;
  for (const std::string& item : SplitList(e.value)) {
    out.push_back(PositiveInt({e.key, item, e.line}, source, min));
  }
  return out;
}

bool ParseBool(const ConfigEntry& e, const std::string& source) {
  if (e.value == "true" || e.value == "1") return true;
  if (e.value == "false" || e.value == "0") return false;
  throw ParseError(source, e.line, e.key + " must be true or false");
}

}  // namespace

const std::vector<std::string>& ExperimentIds() {
  static const std::vector<std::string> ids = {
      "table1", "pareto_battleships", "pareto_leduc",
      "table2", "table3",             "large_game"};
  return ids;
}

bool IsExperimentId(const std::string& id) {
  for (const std::string& known : ExperimentIds()) {
    if (known == id) return true;
  }
  return false;
}

ExperimentSpec ExperimentSpecFromEntries(const std::vector<ConfigEntry>& entries,
                                         const std::string& source) {
  ExperimentSpec spec;
  std::vector<ConfigEntry> rest;
  spec.game = GameConfigFromEntries(entries, source, &rest);
  for (const ConfigEntry& e : entries) {
    if (e.key == "game" || e.key == "width" || e.key == "height" ||
        e.key == "ships" || e.key == "first_shooter") {
      spec.game_set = true;
    }
  }
  for (const ConfigEntry& e : rest) {
    if (e.key == "id") {
      if (!IsExperimentId(e.value)) {
        throw ParseError(source, e.line, "unknown experiment id '" + e.value + "'");
      }
      spec.id = e.value;
    } else if (e.key == "seed") {
      char* end = nullptr;
      unsigned long long v = std::strtoull(e.value.c_str(), &end, 10);
      if (*end != '\0' || e.value[0] == '-') {
        throw ParseError(source, e.line, "seed must be a non-negative integer");
      }
      spec.seed = v;
    } else if (e.key == "threads") {
      spec.threads = PositiveInt(e, source, 0);
    } else if (e.key == "iterations") {
      spec.iterations = PositiveInt(e, source, 1);
    } else if (e.key == "rnr_iterations") {
      spec.rnr_iterations = PositiveInt(e, source, 1);
    } else if (e.key == "baseline_iterations") {
      spec.baseline_iterations = PositiveInt(e, source, 1);
    } else if (e.key == "depth") {
      spec.depths = IntList(e, source, 1);
    } else if (e.key == "p") {
      std::vector<double> grid;
      for (const std::string& item : SplitList(e.value)) {
        double p = ParseRealValue({e.key, item, e.line}, source);
        if (!(p >= 0.0 && p <= 1.0)) {
          throw ParseError(source, e.line,
                           "p = " + item + " violates 0 <= p <= 1");
        }
        grid.push_back(p);
      }
      spec.p_grid = grid;
    } else if (e.key == "samples") {
      spec.samples = IntList(e, source, 1);
    } else if (e.key == "trials") {
      spec.trials = PositiveInt(e, source, 1);
    } else if (e.key == "random_opponents") {
      spec.random_opponents = PositiveInt(e, source, 0);
    } else if (e.key == "value_samples") {
      spec.value_samples = PositiveInt(e, source, 0);
    } else if (e.key == "exact_control") {
      spec.exact_control = ParseBool(e, source);
    } else if (e.key == "baseline") {
      spec.baseline = ParseBool(e, source);
    } else if (e.key == "portfolio") {
      spec.portfolio = e.value;
    } else {
      throw ParseError(source, e.line, "unknown key '" + e.key + "'");
    }
  }
  return spec;
}

ExperimentSpec ParseExperimentConfig(const std::string& text,
                                     const std::string& source) {
  return ExperimentSpecFromEntries(ParseKeyValues(text, source), source);
}

ExperimentSpec LoadExperimentConfig(const std::string& path) {
  return ExperimentSpecFromEntries(ReadKeyValueFile(path), path);
}

void ValidateExperimentSpec(const ExperimentSpec& spec) {
  if (!IsExperimentId(spec.id)) {
    throw InvalidArgument("unknown experiment id '" + spec.id + "'");
  }
}

}  // namespace abd
