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


#ifndef ABD_SOLVER_CFR_H_
#define ABD_SOLVER_CFR_H_

#include <array>
#include <cstdint>
#include <vector>

#include "abd/efg/game.h"
#include "abd/efg/policy.h"
#include "abd/efg/tree.h"

namespace abd {

enum class CfrVariant { kVanilla, kPlus };
enum class CfrAveraging { kUniform, kLinear };

struct CfrConfig {
  int iterations = 1000;
  CfrVariant variant = CfrVariant::kPlus;
  CfrAveraging averaging = CfrAveraging::kLinear;
  bool alternating_updates = true;
};

void ValidateCfrConfig(const CfrConfig& config);

// Tabular CFR over a materialized tree. Deterministic.
class CfrSolver {
 public:
  CfrSolver(const GameTree& tree, const CfrConfig& config);

  // Runs `n` further iterations.
  void Iterate(int n);
  int iterations() const { return iterations_; }

  // Flat average strategy; uniform at infosets with no accumulated weight.
  std::vector<double> AverageStrategy(Player p) const;
  std::vector<double> CurrentStrategy(Player p) const;

 private:
  double Traverse(int64_t node, Player traverser, double reach_self,
                  double reach_other);
  void RegretMatch(Player p, std::vector<double>& out) const;

  const GameTree& tree_;
  CfrConfig config_;
  int iterations_ = 0;
  std::array<std::vector<double>, 2> regret_;
  std::array<std::vector<double>, 2> regret_delta_;
  std::array<std::vector<double>, 2> average_;
  std::array<std::vector<double>, 2> current_;
  double average_weight_ = 1.0;
  std::vector<double> scratch_;
  size_t scratch_top_ = 0;
};

// Quality of a profile on a tree. value_lower is what P1's strategy
// guarantees, value_upper what P2's strategy concedes.
struct ProfileBounds {
  double value = 0.0;
  double value_lower = 0.0;
  double value_upper = 0.0;
  double nash_conv() const { return value_upper - value_lower; }
};

ProfileBounds EvaluateProfile(const GameTree& tree,
                              const std::vector<double>& s1,
                              const std::vector<double>& s2);

struct SolveReport {
  TabularPolicy average[2];
  double value = 0.0;  // Expected P1 utility of the average profile.
  double value_lower = 0.0;
  double value_upper = 0.0;
  // Estimates that take `value` as the game value; they sum to nash_conv,
  // which bounds the true exploitability of either average.
  double exploitability_p1 = 0.0;
  double exploitability_p2 = 0.0;
  double nash_conv = 0.0;
  int iterations = 0;
  double seconds = 0.0;
  int64_t nodes = 0;
};

SolveReport SolveTree(const GameTree& tree, const CfrConfig& config);
SolveReport CfrSolve(const Game& game, const CfrConfig& config);
SolveReport CfrSolve(const State& root, const CfrConfig& config,
                     int64_t node_cap);

}  // namespace abd

#endif  // ABD_SOLVER_CFR_H_
