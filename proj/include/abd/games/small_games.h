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

#ifndef ABD_GAMES_SMALL_GAMES_H_
#define ABD_GAMES_SMALL_GAMES_H_

#include <memory>
#include <string>
#include <vector>

#include "abd/efg/game.h"
#include "abd/efg/policy.h"

namespace abd {

// Game given by an explicit list of nodes; handy for hand-built test games.
// Node 0 is the root.
struct TableNode {
  PlayerRole role = PlayerRole::kTerminal;
  std::vector<std::string> labels;
  std::vector<int> children;
  std::vector<double> chance_probs;
  double utility = 0.0;
  // Infoset keys per player; equal keys must have equal public keys.
  std::string key[2];
  std::string public_key;
};

class TableGame : public Game, public std::enable_shared_from_this<TableGame> {
 public:
  TableGame(std::string id, std::vector<TableNode> nodes);
  std::unique_ptr<State> NewRoot() const override;
  std::string Id() const override { return id_; }
  double MinUtility() const override { return min_; }
  double MaxUtility() const override { return max_; }
  const TableNode& node(int i) const { return nodes_[i]; }

 private:
  std::string id_;
  std::vector<TableNode> nodes_;
  double min_ = 0.0;
  double max_ = 0.0;
};

class TableState : public State {
 public:
  TableState(std::shared_ptr<const TableGame> game, int node)
      : game_(std::move(game)), node_(node) {}
  PlayerRole Role() const override { return game_->node(node_).role; }
  int NumActions() const override {
    return static_cast<int>(game_->node(node_).children.size());
  }
  std::string ActionLabel(int action) const override;
  void ApplyAction(int action) override;
  std::unique_ptr<State> Clone() const override {
    return std::make_unique<TableState>(*this);
  }
  std::vector<double> ChanceProbs() const override;
  double UtilityP1() const override { return game_->node(node_).utility; }
  std::string InfosetKey(Player player) const override {
    return game_->node(node_).key[PlayerIndex(player)];
  }
  std::string PublicKey() const override {
    return game_->node(node_).public_key;
  }
  std::string HistoryKey() const override { return history_; }
  int node() const { return node_; }

 private:
  std::shared_ptr<const TableGame> game_;
  int node_;
  std::string history_;
};

// P1 picks heads or tails, P2 picks without observing; P1 wins +1 on a
// match and loses 1 otherwise.
std::shared_ptr<const TableGame> MakeMatchingPennies();

// Three-line toy: P1 either takes the safe line OPT (payoff 0), the line
// ADPT where the opponent either blunders (+1) or answers correctly (0), or
// the line RISK where the opponent either blunders (+1) or punishes (-1).
// The opponent observes the line. With `include_adpt` false only OPT and
// RISK exist. Modeled opponent: ThresholdToyBlunderer().
std::shared_ptr<const TableGame> MakeThresholdToy(bool include_adpt = true);
PolicyPtr ThresholdToyBlunderer();

}  // namespace abd

#endif  // ABD_GAMES_SMALL_GAMES_H_
