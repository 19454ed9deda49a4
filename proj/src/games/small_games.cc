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

#include "abd/games/small_games.h"

#include <algorithm>

namespace abd {

TableGame::TableGame(std::string id, std::vector<TableNode> nodes)
    : id_(std::move(id)), nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw InvalidArgument("table game needs a root");
  bool first = true;
  for (size_t i = 0; i < nodes_.size(); ++i) {
    const TableNode& n = nodes_[i];
    if (n.role == PlayerRole::kTerminal) {
      if (!n.children.empty()) {
        throw InvalidArgument("terminal table node has children");
      }
      min_ = first ? n.utility : std::min(min_, n.utility);
      max_ = first ? n.utility : std::max(max_, n.utility);
      first = false;
      continue;
    }
    if (n.children.empty() || n.labels.size() != n.children.size()) {
      throw InvalidArgument("table node " + std::to_string(i) +
                            " needs one label per child");
    }
    for (int c : n.children) {
      if (c <= static_cast<int>(i) || c >= static_cast<int>(nodes_.size())) {
        throw InvalidArgument("table node children must follow their parent");
      }
    }
    if (n.role == PlayerRole::kChance &&
        n.chance_probs.size() != n.children.size()) {
      throw InvalidArgument("chance table node needs one probability each");
    }
  }
}

std::unique_ptr<State> TableGame::NewRoot() const {
  return std::make_unique<TableState>(shared_from_this(), 0);
}

std::string TableState::ActionLabel(int action) const {
  return game_->node(node_).labels.at(action);
}

void TableState::ApplyAction(int action) {
  const TableNode& n = game_->node(node_);
  if (action < 0 || action >= static_cast<int>(n.children.size())) {
    throw InvalidArgument("illegal action " + std::to_string(action));
  }
  history_.push_back(static_cast<char>(action));
  node_ = n.children[action];
}

std::vector<double> TableState::ChanceProbs() const {
  if (Role() != PlayerRole::kChance) return State::ChanceProbs();
  return game_->node(node_).chance_probs;
}

namespace {

TableNode Decision(PlayerRole role, std::vector<std::string> labels,
                   std::vector<int> children, std::string p1_key,
                   std::string p2_key, std::string public_key) {
  TableNode n;
  n.role = role;
  n.labels = std::move(labels);
  n.children = std::move(children);
  n.key[0] = std::move(p1_key);
  n.key[1] = std::move(p2_key);
  n.public_key = std::move(public_key);
  return n;
}

TableNode Terminal(double utility, std::string p1_key, std::string p2_key,
                   std::string public_key) {
  TableNode n;
  n.utility = utility;
  n.key[0] = std::move(p1_key);
  n.key[1] = std::move(p2_key);
  n.public_key = std::move(public_key);
  return n;
}

class BlundererPolicy : public Policy {
 public:
  std::vector<double> ActionProbs(const State& state) const override {
    std::vector<double> probs(state.NumActions(), 0.0);
    probs[0] = 1.0;  // Action 0 is the blunder on both opponent lines.
    return probs;
  }
  std::string Name() const override { return "blunderer"; }
};

}  // namespace

std::shared_ptr<const TableGame> MakeMatchingPennies() {
  // P1's choice is private, so every history after it shares one public
  // state; P2's move ends the game.
  std::vector<TableNode> nodes;
  nodes.push_back(Decision(PlayerRole::kP1, {"H", "T"}, {1, 2}, "000||",
                           "000||", "000|"));
  nodes.push_back(Decision(PlayerRole::kP2, {"H", "T"}, {3, 4}, "001||H",
                           "001||", "001|"));
  nodes.push_back(Decision(PlayerRole::kP2, {"H", "T"}, {5, 6}, "001||T",
                           "001||", "001|"));
  nodes.push_back(Terminal(1.0, "002|HH|H", "002|HH|H", "002|HH"));
  nodes.push_back(Terminal(-1.0, "002|HT|H", "002|HT|T", "002|HT"));
  nodes.push_back(Terminal(-1.0, "002|TH|T", "002|TH|H", "002|TH"));
  nodes.push_back(Terminal(1.0, "002|TT|T", "002|TT|T", "002|TT"));
  return std::make_shared<TableGame>("matching_pennies", std::move(nodes));
}

std::shared_ptr<const TableGame> MakeThresholdToy(bool include_adpt) {
  std::vector<TableNode> nodes;
  if (include_adpt) {
    nodes.push_back(Decision(PlayerRole::kP1, {"OPT", "ADPT", "RISK"},
                             {1, 2, 3}, "0", "0", "0"));
    nodes.push_back(Terminal(0.0, "1O", "1O", "1O"));
    nodes.push_back(Decision(PlayerRole::kP2, {"blunder", "correct"}, {4, 5},
                             "1A", "1A", "1A"));
    nodes.push_back(Decision(PlayerRole::kP2, {"blunder", "punish"}, {6, 7},
                             "1R", "1R", "1R"));
    nodes.push_back(Terminal(1.0, "2Ab", "2Ab", "2Ab"));
    nodes.push_back(Terminal(0.0, "2Ac", "2Ac", "2Ac"));
    nodes.push_back(Terminal(1.0, "2Rb", "2Rb", "2Rb"));
    nodes.push_back(Terminal(-1.0, "2Rp", "2Rp", "2Rp"));
    return std::make_shared<TableGame>("threshold_toy", std::move(nodes));
  }
  nodes.push_back(
      Decision(PlayerRole::kP1, {"OPT", "RISK"}, {1, 2}, "0", "0", "0"));
  nodes.push_back(Terminal(0.0, "1O", "1O", "1O"));
  nodes.push_back(Decision(PlayerRole::kP2, {"blunder", "punish"}, {3, 4},
                           "1R", "1R", "1R"));
  nodes.push_back(Terminal(1.0, "2Rb", "2Rb", "2Rb"));
  nodes.push_back(Terminal(-1.0, "2Rp", "2Rp", "2Rp"));
  return std::make_shared<TableGame>("threshold_toy_opt_risk",
                                     std::move(nodes));
}

PolicyPtr ThresholdToyBlunderer() {
  return std::make_shared<BlundererPolicy>();
}

}  // namespace abd
