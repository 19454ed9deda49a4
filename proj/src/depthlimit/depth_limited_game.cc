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


#include "abd/depthlimit/depth_limited_game.h"

#include <set>
#include <utility>

namespace abd {
namespace {

std::vector<std::string> UniqueLabels(const Portfolio& portfolio) {
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (int i = 0; i < portfolio.size(); ++i) {
    std::string label = portfolio.EntryName(i);
    if (seen.count(label) > 0) label += "#" + std::to_string(i);
    seen.insert(label);
    labels.push_back(label);
  }
  return labels;
}

bool GenuineChance(const State& s) {
  return s.IsChance() && !s.Mover().has_value();
}

bool CountsAsOpponentMove(const State& s) {
  return s.InSubgame() && s.Mover() == Player::kP2;
}

void CollectFrontier(const State& s, int moves, int depth,
                     std::vector<std::unique_ptr<State>>* out) {
  if (s.IsTerminal()) return;
  if (moves >= depth && !GenuineChance(s)) {
    out->push_back(s.Clone());
    return;
  }
  std::vector<double> probs;
  if (s.IsChance()) probs = s.ChanceProbs();
  int next = moves + (CountsAsOpponentMove(s) ? 1 : 0);
  for (int a = 0; a < s.NumActions(); ++a) {
    if (s.IsChance() && probs[a] <= 0.0) continue;
    CollectFrontier(*s.Child(a), next, depth, out);
  }
}

}  // namespace

DepthLimitedGame::DepthLimitedGame(GamePtr inner, DepthLimitOptions options,
                                   std::shared_ptr<LeafValueTable> values)
    : inner_(std::move(inner)),
      options_(options),
      values_(std::move(values)) {
  if (inner_ == nullptr) throw InvalidArgument("depth limit needs a game");
  if (options_.depth.d < 0) {
    throw InvalidArgument("depth must be non-negative, got " +
                          std::to_string(options_.depth.d));
  }
  if (options_.mode == LeafMode::kMatrix && values_ == nullptr) {
    throw InvalidArgument("matrix leaves need a leaf value table");
  }
  if (values_ != nullptr) {
    if (values_->p1().size() == 0 || values_->p2().size() == 0) {
      throw InvalidArgument("matrix leaves need non-empty portfolios");
    }
    p1_labels_ = UniqueLabels(values_->p1());
    p2_labels_ = UniqueLabels(values_->p2());
    if (options_.fixed_column_in_free) {
      if (values_->fixed() == nullptr) {
        throw InvalidArgument("fixed column requested without a fixed model");
      }
      p2_labels_.push_back("fixed");
    }
  }
}

std::unique_ptr<State> DepthLimitedGame::NewRoot() const {
  return std::make_unique<DepthLimitedState>(shared_from_this(),
                                             inner_->NewRoot());
}

std::string DepthLimitedGame::Id() const {
  std::string id = "dl(" + inner_->Id() + ",d=" +
                   std::to_string(options_.depth.d);
  if (options_.mode == LeafMode::kRational) id += ",rational";
  if (values_ != nullptr) {
    id += "," + values_->p1().name + "," + values_->p2().name;
    if (options_.fixed_column_in_free) id += ",fixed-column";
  }
  return id + ")";
}

DepthLimitedState::DepthLimitedState(
    std::shared_ptr<const DepthLimitedGame> game, std::unique_ptr<State> inner)
    : game_(std::move(game)), inner_(std::move(inner)) {
  Settle();
}

DepthLimitedState::DepthLimitedState(const DepthLimitedState& other)
    : game_(other.game_),
      inner_(other.inner_->Clone()),
      phase_(other.phase_),
      p2_moves_(other.p2_moves_),
      rational_node_(other.rational_node_),
      fixed_leaf_(other.fixed_leaf_),
      pick1_(other.pick1_),
      pick2_(other.pick2_) {}

void DepthLimitedState::Settle() {
  rational_node_ = false;
  if (phase_ != Phase::kInner || inner_->IsTerminal()) return;
  const DepthLimitOptions& options = game_->options();
  bool beyond = p2_moves_ >= options.depth.d;
  if (options.mode == LeafMode::kRational &&
      (inner_->FixedOpponent() || game_->values() == nullptr)) {
    rational_node_ = beyond && inner_->FixedOpponent() && inner_->IsChance() &&
                     inner_->Mover() == Player::kP2;
    return;
  }
  if (inner_->OffPath() || (beyond && !GenuineChance(*inner_))) {
    phase_ = Phase::kP1Pick;
    fixed_leaf_ = inner_->FixedOpponent();
  }
}

int DepthLimitedState::NumP2Columns() const {
  return static_cast<int>(game_->p2_labels().size());
}

PlayerRole DepthLimitedState::Role() const {
  switch (phase_) {
    case Phase::kInner:
      return rational_node_ ? PlayerRole::kP2 : inner_->Role();
    case Phase::kP1Pick:
      return PlayerRole::kP1;
    case Phase::kP2Pick:
      return PlayerRole::kP2;
    case Phase::kLeafDone:
      return PlayerRole::kTerminal;
  }
  return PlayerRole::kTerminal;
}

int DepthLimitedState::NumActions() const {
  switch (phase_) {
    case Phase::kInner:
      return inner_->NumActions();
    case Phase::kP1Pick:
      return static_cast<int>(game_->p1_labels().size());
    case Phase::kP2Pick:
      return NumP2Columns();
    case Phase::kLeafDone:
      return 0;
  }
  return 0;
}

std::string DepthLimitedState::ActionLabel(int action) const {
  switch (phase_) {
    case Phase::kInner:
      return inner_->ActionLabel(action);
    case Phase::kP1Pick:
      return game_->p1_labels().at(action);
    case Phase::kP2Pick:
      return game_->p2_labels().at(action);
    case Phase::kLeafDone:
      break;
  }
  throw InvalidArgument("no actions at a terminal history");
}

void DepthLimitedState::ApplyAction(int action) {
  if (action < 0 || action >= NumActions()) {
    throw InvalidArgument("action " + std::to_string(action) +
                          " out of range at " + HexEncode(HistoryKey()));
  }
  switch (phase_) {
    case Phase::kInner:
      if (CountsAsOpponentMove(*inner_)) ++p2_moves_;
      inner_->ApplyAction(action);
      Settle();
      return;
    case Phase::kP1Pick:
      pick1_ = action;
      phase_ = fixed_leaf_ ? Phase::kLeafDone : Phase::kP2Pick;
      return;
    case Phase::kP2Pick:
      pick2_ = action;
      phase_ = Phase::kLeafDone;
      return;
    case Phase::kLeafDone:
      break;
  }
  throw InvalidArgument("no actions at a terminal history");
}

std::vector<double> DepthLimitedState::ChanceProbs() const {
  if (phase_ != Phase::kInner || rational_node_) {
    throw InvalidArgument("not a chance node");
  }
  return inner_->ChanceProbs();
}

double DepthLimitedState::UtilityP1() const {
  if (phase_ == Phase::kInner) return inner_->UtilityP1();
  if (phase_ != Phase::kLeafDone) {
    throw InvalidArgument("utility queried at a non-terminal history");
  }
  int column = LeafValueTable::kFixedColumn;
  if (!fixed_leaf_ && pick2_ < game_->values()->p2().size()) column = pick2_;
  return game_->values()->Value(Base(), pick1_, column);
}

std::string DepthLimitedState::InfosetKey(Player player) const {
  if (phase_ == Phase::kInner) {
    if (player == Player::kP2 && rational_node_) {
      return kRationalTag + inner_->Base().InfosetKey(player);
    }
    return inner_->InfosetKey(player);
  }
  std::string key = inner_->InfosetKey(player) + kMvsTag;
  if (player == Player::kP1 && pick1_ >= 0) {
    key += "|" + std::to_string(pick1_);
  }
  return key;
}

std::string DepthLimitedState::PublicKey() const {
  std::string key = inner_->PublicKey();
  if (phase_ == Phase::kInner) return key;
  return key + kMvsTag;
}

std::string DepthLimitedState::HistoryKey() const {
  std::string key = inner_->HistoryKey();
  if (phase_ == Phase::kInner) return key;
  key += kMvsTag;
  if (pick1_ >= 0) key += "|" + std::to_string(pick1_);
  if (pick2_ >= 0) key += "|" + std::to_string(pick2_);
  return key;
}

std::optional<Player> DepthLimitedState::Mover() const {
  switch (phase_) {
    case Phase::kInner:
      return inner_->Mover();
    case Phase::kP1Pick:
      return Player::kP1;
    case Phase::kP2Pick:
      return Player::kP2;
    case Phase::kLeafDone:
      break;
  }
  return std::nullopt;
}

std::shared_ptr<const DepthLimitedGame> MakeDepthLimited(
    GamePtr inner, DepthLimitOptions options,
    std::shared_ptr<LeafValueTable> values) {
  return std::make_shared<DepthLimitedGame>(std::move(inner), options,
                                            std::move(values));
}

std::vector<std::unique_ptr<State>> FrontierHistories(const State& root,
                                                      DepthSpec depth) {
  std::vector<std::unique_ptr<State>> out;
  CollectFrontier(root, 0, depth.d, &out);
  return out;
}

}  // namespace abd
