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

#ifndef ABD_EFG_TREE_H_
#define ABD_EFG_TREE_H_

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "abd/efg/game.h"
#include "abd/efg/policy.h"

namespace abd {

// Explicit materialization of a game tree. Children of a node are stored
// contiguously; decision nodes refer to a per-player infoset table whose ids
// follow discovery order, so a parent infoset always has a smaller id than
// any infoset below it.
class GameTree {
 public:
  struct Node {
    PlayerRole role;
    int32_t infoset = -1;
    int32_t first_child = -1;
    int32_t num_children = 0;
    double value = 0.0;  // P1 utility at terminals.
  };

  struct Infoset {
    std::string key;
    std::vector<std::string> labels;
    int32_t offset = 0;  // Into flat per-player strategy arrays.
    int num_actions() const { return static_cast<int>(labels.size()); }
  };

  struct Options {
    int64_t node_cap = kDefaultNodeCap;
    // Drop chance outcomes of probability zero.
    bool prune_zero_chance = true;
  };

  static GameTree Build(const State& root, const Options& options);
  static GameTree Build(const State& root);

  int64_t num_nodes() const { return static_cast<int64_t>(nodes_.size()); }
  const Node& node(int64_t i) const { return nodes_[i]; }
  // Probability of reaching node i from its chance parent (1 otherwise).
  double chance_prob(int64_t i) const { return chance_prob_[i]; }
  // Action index of node i in its parent's legal-action list.
  int action_from_parent(int64_t i) const { return action_[i]; }

  int num_infosets(Player p) const {
    return static_cast<int>(infosets_[PlayerIndex(p)].size());
  }
  const Infoset& infoset(Player p, int id) const {
    return infosets_[PlayerIndex(p)][id];
  }
  // -1 if absent.
  int FindInfoset(Player p, const std::string& key) const;
  // Total number of (infoset, action) pairs of a player.
  int strategy_size(Player p) const { return strategy_size_[PlayerIndex(p)]; }

  // Flat behavioral strategy of `p`, indexed by infoset offset + action.
  std::vector<double> UniformStrategy(Player p) const;
  std::vector<double> StrategyFrom(Player p, const TabularPolicy& policy) const;
  TabularPolicy ToPolicy(Player p, const std::vector<double>& flat,
                         const std::string& name) const;

 private:
  std::vector<Node> nodes_;
  std::vector<double> chance_prob_;
  std::vector<int> action_;
  std::array<std::vector<Infoset>, 2> infosets_;
  std::array<std::unordered_map<std::string, int>, 2> infoset_index_;
  std::array<int, 2> strategy_size_{0, 0};
};

// Expected P1 utility of a flat profile on a materialized tree.
double TreeExpectedValue(const GameTree& tree, const std::vector<double>& s1,
                         const std::vector<double>& s2);

struct TreeBestResponse {
  double value = 0.0;  // For the responder.
  std::vector<int> best_action;  // Per responder infoset.
};

// Best response of `responder` against the flat strategy of the other player.
TreeBestResponse ComputeTreeBestResponse(const GameTree& tree,
                                         Player responder,
                                         const std::vector<double>& opponent);

}  // namespace abd

#endif  // ABD_EFG_TREE_H_
