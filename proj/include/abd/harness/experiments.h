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

#ifndef ABD_HARNESS_EXPERIMENTS_H_
#define ABD_HARNESS_EXPERIMENTS_H_

#include <string>
#include <vector>

#include "abd/efg/game.h"
#include "abd/efg/policy.h"
#include "abd/harness/csv.h"
#include "abd/harness/experiment_config.h"

namespace abd {

// CSV header of an experiment id.
std::vector<std::string> ExperimentHeader(const std::string& id);

// Strategy values in the tables are computed from the serialized form of
// each strategy: it is written (under <out>/strategies when an output
// directory is set), read back and evaluated again, and the run fails if
// the two evaluations differ by more than 1e-6.
inline constexpr double kRoundTripTolerance = 1e-6;

// CDBR and ABD(p = 1) values against the opponent for each depth,
// exact expectation. Defaults: 2x2 board, one 1x1 ship, corner_avoider,
// depths 1-4, avoid4 portfolios, 1000 CFR+ iterations.
CsvTable RunTable1(const ExperimentSpec& spec);

// RNR, ABD and (optionally) CDRNR curves over the p grid.
// pareto_battleships defaults: 2x2/1x1 vs corner_avoider, depth 2, avoid4,
// p = 0, 0.1, ..., 1, 1000 iterations per resolve (CFR resolves also at
// p = 1), 300 per CDRNR resolve, 2000 for RNR. pareto_leduc defaults: opponents uniform and s1 (curve
// names carry the opponent), depth 1, leduc2, p = 0, 0.5, 1, no CDRNR.
CsvTable RunPareto(const ExperimentSpec& spec);

// Leduc: CDBR, ABD with sampled leaf values and ABD with exact values
// against S1-S4 and the mean over random opponents, for each depth. Method
// names carry the depth, e.g. "abd:d=1:sampled10". Defaults: depths 1 and
// 2, 10 samples per history, 500 random opponents, 1000 iterations.
CsvTable RunTable2(const ExperimentSpec& spec);

// Fraction of trials in which the root resolve (p = 1, sampled values)
// puts its highest action value on a placement covering the top-left cell.
// table3 defaults: 3x3 board, one 2x1 ship, noisy:0.05, parity3, depth 2,
// samples 1-5, 100 trials. large_game: 5x5 board, two 2x2 ships, 100
// samples, one trial.
CsvTable RunTable3(const ExperimentSpec& spec);

// Runs spec.id; writes <out_dir>/<id>.csv when out_dir is set.
CsvTable RunExperiment(const ExperimentSpec& spec);

// Whether P1's placement action at the Battleships root covers cell 0.
bool PlacementCoversTopLeft(const State& root, int action);

// Serializes a P1 strategy, optionally to <out_dir>/strategies/<name>.txt,
// and returns the policy read back from the serialized bytes.
TabularPolicy PersistStrategy(const std::string& out_dir,
                              const std::string& name, const Game& game,
                              const TabularPolicy& policy);

}  // namespace abd

#endif  // ABD_HARNESS_EXPERIMENTS_H_
