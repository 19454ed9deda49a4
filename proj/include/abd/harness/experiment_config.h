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

#ifndef ABD_HARNESS_EXPERIMENT_CONFIG_H_
#define ABD_HARNESS_EXPERIMENT_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abd/games/game_config.h"

namespace abd {

// table1, pareto_battleships, pareto_leduc, table2, table3, large_game.
const std::vector<std::string>& ExperimentIds();
bool IsExperimentId(const std::string& id);

// One experiment run. Unset overrides take the experiment's defaults.
struct ExperimentSpec {
  std::string id;
  GameConfig game;
  bool game_set = false;  // Any game key was given.
  uint64_t seed = 1;
  std::string out_dir;  // Empty: nothing is written.
  int threads = 0;

  std::optional<int> iterations;           // CFR+ per resolve.
  std::optional<int> rnr_iterations;       // Full-game restricted responses.
  std::optional<int> baseline_iterations;  // CDBR / CDRNR resolves.
  std::optional<std::vector<int>> depths;
  std::optional<std::vector<double>> p_grid;
  std::optional<std::vector<int>> samples;  // Rollouts per history.
  std::optional<int> trials;
  std::optional<int> random_opponents;
  std::optional<int> value_samples;  // 0 means exact leaf values.
  std::optional<bool> exact_control;
  std::optional<std::string> portfolio;
  std::optional<bool> baseline;  // Emit the CDRNR curve.
};

// Config keys: id, seed, threads, the game keys (game, width, height, ships,
// first_shooter, opponent), iterations, rnr_iterations,
// baseline_iterations, depth (comma list), p (comma list, each in [0, 1]),
// samples (comma list), trials, random_opponents, value_samples,
// exact_control, portfolio, baseline. Unknown keys and out-of-range values
// raise ParseError with the line number.
ExperimentSpec ExperimentSpecFromEntries(const std::vector<ConfigEntry>& entries,
                                         const std::string& source);
ExperimentSpec ParseExperimentConfig(const std::string& text,
                                     const std::string& source);
ExperimentSpec LoadExperimentConfig(const std::string& path);

// Throws InvalidArgument for an unknown id.
void ValidateExperimentSpec(const ExperimentSpec& spec);

}  // namespace abd

#endif  // ABD_HARNESS_EXPERIMENT_CONFIG_H_
