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


#include "abd/solver/cfr.h"

#include <algorithm>
#include <chrono>

namespace abd {

void ValidateCfrConfig(const CfrConfig& config) {
  if (config.iterations < 1) {
    throw InvalidArgument("CFR iterations must be at least 1, got " +
                          std::to_string(config.iterations));
  }
}

CfrSolver::CfrSolver(const GameTree& tree, const CfrConfig& config)
    : tree_(tree), config_(config) {
  for (int i = 0; i < 2; ++i) {
    Player p = static_cast<Player>(i);
    size_t n = tree_.strategy_size(p);
    regret_[i].assign(n, 0.0);
    regret_delta_[i].assign(n, 0.0);
    average_[i].assign(n, 0.0);
    current_[i].assign(n, 0.0);
  }
}

void CfrSolver::RegretMatch(Player p, std::vector<double>& out) const {
  const std::vector<double>& r = regret_[PlayerIndex(p)];
  for (int id = 0; id < tree_.num_infosets(p); ++id) {
    const GameTree::Infoset& info = tree_.infoset(p, id);
    int n = info.num_actions();
    double total = 0.0;
    for (int a = 0; a < n; ++a) total += std::max(r[info.offset + a], 0.0);
    for (int a = 0; a < n; ++a) {
      out[info.offset + a] =
          total > 0.0 ? std::max(r[info.offset + a], 0.0) / total : 1.0 / n;
    }
  }
}

std::vector<double> CfrSolver::CurrentStrategy(Player p) const {
  std::vector<double> out(tree_.strategy_size(p));
  RegretMatch(p, out);
  return out;
}

std::vector<double> CfrSolver::AverageStrategy(Player p) const {
  const std::vector<double>& avg = average_[PlayerIndex(p)];
  std::vector<double> out(avg.size());
  for (int id = 0; id < tree_.num_infosets(p); ++id) {
    const GameTree::Infoset& info = tree_.infoset(p, id);
    int n = info.num_actions();
    double total = 0.0;
    for (int a = 0; a < n; ++a) total += avg[info.offset + a];
    for (int a = 0; a < n; ++a) {
      out[info.offset + a] = total > 0.0 ? avg[info.offset + a] / total : 1.0 / n;
    }
  }
  return out;
}

// Returns the traverser's expected utility below `node`, weighted by nothing
// (reaches are passed down separately).
double CfrSolver::Traverse(int64_t node, Player traverser, double reach_self,
                           double reach_other) {
  const GameTree::Node& n = tree_.node(node);
  switch (n.role) {
    case PlayerRole::kTerminal:
      return UtilityFor(traverser, n.value);
    case PlayerRole::kChance: {
      double v = 0.0;
      for (int a = 0; a < n.num_children; ++a) {
        int64_t child = n.first_child + a;
        double q = tree_.chance_prob(child);
        v += q * Traverse(child, traverser, reach_self, reach_other * q);
      }
      return v;
    }
    default:
      break;
  }
  Player actor = *PlayerOf(n.role);
  int ai = PlayerIndex(actor);
  const GameTree::Infoset& info = tree_.infoset(actor, n.infoset);
  const double* sigma = current_[ai].data() + info.offset;
  if (actor != traverser) {
    double v = 0.0;
    for (int a = 0; a < n.num_children; ++a) {
      double q = sigma[a];
      // Kept when only the traverser reaches it, so every history of an
      // infoset feeds the average alike.
      if (q <= 0.0 && reach_self <= 0.0) continue;
      v += q * Traverse(n.first_child + a, traverser, reach_self,
                        reach_other * q);
    }
    return v;
  }
  size_t base = scratch_top_;
  scratch_top_ += n.num_children;
  if (scratch_.size() < scratch_top_) scratch_.resize(scratch_top_ * 2);
  double v = 0.0;
  for (int a = 0; a < n.num_children; ++a) {
    double q = sigma[a];
    double child_reach = reach_self * q;
    double cv = 0.0;
    // Subtrees where nobody reaches contribute nothing to either update.
    if (child_reach > 0.0 || reach_other > 0.0) {
      cv = Traverse(n.first_child + a, traverser, child_reach, reach_other);
    }
    scratch_[base + a] = cv;
    v += q * cv;
  }
  double* delta = regret_delta_[ai].data() + info.offset;
  double* avg = average_[ai].data() + info.offset;
  for (int a = 0; a < n.num_children; ++a) {
    delta[a] += reach_other * (scratch_[base + a] - v);
    avg[a] += average_weight_ * reach_self * sigma[a];
  }
  scratch_top_ = base;
  return v;
}

void CfrSolver::Iterate(int n) {
  for (int it = 0; it < n; ++it) {
    ++iterations_;
    average_weight_ = config_.averaging == CfrAveraging::kLinear
                          ? static_cast<double>(iterations_)
                          : 1.0;
    auto apply = [&](Player p) {
      int pi = PlayerIndex(p);
      std::vector<double>& r = regret_[pi];
      std::vector<double>& d = regret_delta_[pi];
      for (size_t i = 0; i < r.size(); ++i) {
        r[i] += d[i];
        if (config_.variant == CfrVariant::kPlus && r[i] < 0.0) r[i] = 0.0;
        d[i] = 0.0;
      }
    };
    if (config_.alternating_updates) {
      for (Player p : {Player::kP1, Player::kP2}) {
        RegretMatch(Player::kP1, current_[0]);
        RegretMatch(Player::kP2, current_[1]);
        Traverse(0, p, 1.0, 1.0);
        apply(p);
      }
    } else {
      RegretMatch(Player::kP1, current_[0]);
      RegretMatch(Player::kP2, current_[1]);
      Traverse(0, Player::kP1, 1.0, 1.0);
      Traverse(0, Player::kP2, 1.0, 1.0);
      apply(Player::kP1);
      apply(Player::kP2);
    }
  }
}

ProfileBounds EvaluateProfile(const GameTree& tree,
                              const std::vector<double>& s1,
                              const std::vector<double>& s2) {
  ProfileBounds b;
  b.value = TreeExpectedValue(tree, s1, s2);
  b.value_upper = ComputeTreeBestResponse(tree, Player::kP1, s2).value;
  b.value_lower = -ComputeTreeBestResponse(tree, Player::kP2, s1).value;
  return b;
}

SolveReport SolveTree(const GameTree& tree, const CfrConfig& config) {
  ValidateCfrConfig(config);
  auto start = std::chrono::steady_clock::now();
  CfrSolver solver(tree, config);
  solver.Iterate(config.iterations);
  std::vector<double> s1 = solver.AverageStrategy(Player::kP1);
  std::vector<double> s2 = solver.AverageStrategy(Player::kP2);
  ProfileBounds b = EvaluateProfile(tree, s1, s2);
  SolveReport report;
  report.average[0] = tree.ToPolicy(Player::kP1, s1, "cfr_average_p1");
  report.average[1] = tree.ToPolicy(Player::kP2, s2, "cfr_average_p2");
  report.value = b.value;
  report.value_lower = b.value_lower;
  report.value_upper = b.value_upper;
  report.exploitability_p1 = b.value - b.value_lower;
  report.exploitability_p2 = b.value_upper - b.value;
  report.nash_conv = b.nash_conv();
  report.iterations = solver.iterations();
  report.nodes = tree.num_nodes();
  report.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

SolveReport CfrSolve(const State& root, const CfrConfig& config,
                     int64_t node_cap) {
  GameTree::Options options;
  options.node_cap = node_cap;
  GameTree tree = GameTree::Build(root, options);
  return SolveTree(tree, config);
}

SolveReport CfrSolve(const Game& game, const CfrConfig& config) {
  return CfrSolve(*game.NewRoot(), config, NodeCap());
}

}  // namespace abd
