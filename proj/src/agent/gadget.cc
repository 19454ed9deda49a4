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


#include "abd/agent/gadget.h"

#include <atomic>
#include <iostream>
#include <utility>

namespace abd {
namespace {

void CollectOnPath(const State& s, int depth, double weight,
                   const std::vector<std::string>& path, const Policy* trunk,
                   const Policy& fixed, std::vector<WeightedHistory>* out) {
  if (s.PublicKey() != path[depth]) return;
  if (depth + 1 == static_cast<int>(path.size())) {
    out->push_back({std::shared_ptr<const State>(s.Clone()), weight});
    return;
  }
  if (s.IsTerminal()) return;
  std::vector<double> probs;
  if (s.IsChance()) {
    probs = s.ChanceProbs();
  } else if (s.Role() == PlayerRole::kP2) {
    probs = fixed.ActionProbs(s);
  } else if (trunk != nullptr) {
    probs = trunk->ActionProbs(s);
  } else {
    probs.assign(s.NumActions(), 1.0);
  }
  for (int a = 0; a < s.NumActions(); ++a) {
    if (s.IsChance() && probs[a] <= 0.0) continue;
    CollectOnPath(*s.Child(a), depth + 1, weight * probs[a], path, trunk,
                  fixed, out);
  }
}

}  // namespace

std::vector<WeightedHistory> PublicStateHistories(
    const Game& base, const std::vector<std::string>& path,
    const Policy* trunk, const Policy& fixed) {
  if (path.empty()) throw InvalidArgument("public path is empty");
  std::vector<WeightedHistory> out;
  CollectOnPath(*base.NewRoot(), 0, 1.0, path, trunk, fixed, &out);
  return out;
}

GadgetGame::GadgetGame(GamePtr base, TrunkRecord trunk, GadgetOptions options)
    : base_(std::move(base)),
      trunk_(std::move(trunk)),
      options_(std::move(options)) {
  if (!(options_.p >= 0.0 && options_.p <= 1.0)) {
    throw InvalidArgument("p must lie in [0, 1], got " +
                          FormatProb(options_.p));
  }
  if (options_.fixed_opponent == nullptr) {
    throw InvalidArgument("gadget needs a fixed opponent strategy");
  }
  if (trunk_.path.empty()) trunk_.path.push_back(base_->NewRoot()->PublicKey());
  const Policy* p1_weights = options_.p1_infoset ? nullptr : &trunk_.p1;
  public_state_ = PublicStateHistories(*base_, trunk_.path, p1_weights,
                                       *options_.fixed_opponent);
  if (public_state_.empty()) {
    throw InvalidArgument("no history of the game matches the public path");
  }
  for (const WeightedHistory& h : public_state_) {
    if (options_.p1_infoset &&
        h.history->InfosetKey(Player::kP1) != *options_.p1_infoset) {
      continue;
    }
    fixed_.push_back(h);
    fixed_mass_ += h.weight;
  }
  if (fixed_.empty()) {
    throw InvalidArgument("P1 infoset hex " +
                          HexEncode(options_.p1_infoset.value_or("")) +
                          " is not part of the current public state");
  }
  double fixed_weight = options_.p;
  if (fixed_mass_ > 0.0) {
    for (const WeightedHistory& h : fixed_) {
      fixed_probs_.push_back(h.weight / fixed_mass_);
    }
    // The free branch replays the whole trunk and has total mass 1.
    if (options_.p < 1.0) {
      fixed_weight = options_.p * fixed_mass_ /
                     (options_.p * fixed_mass_ + (1.0 - options_.p));
    }
  } else {
    uniform_fallback_ = true;
    fixed_probs_.assign(fixed_.size(), 1.0 / fixed_.size());
    static std::atomic<bool> warned{false};
    if (options_.p > 0.0 && !warned.exchange(true)) {
      std::cerr << "warning: the fixed opponent never reaches public state "
                << HexEncode(trunk_.path.back())
                << "; using a uniform distribution over its histories "
                   "(reported once per process)\n";
    }
  }
  if (fixed_weight > 0.0) {
    branches_.push_back(GadgetState::kFixed);
    branch_probs_.push_back(fixed_weight);
  }
  if (fixed_weight < 1.0) {
    branches_.push_back(GadgetState::kFree);
    branch_probs_.push_back(1.0 - fixed_weight);
  }
}

std::unique_ptr<State> GadgetGame::NewRoot() const {
  return std::make_unique<GadgetState>(shared_from_this());
}

std::string GadgetGame::Id() const {
  std::string id = "gadget(" + base_->Id() + ",p=" + FormatProb(options_.p) +
                   "," + options_.fixed_opponent->Name() +
                   ",depth=" + std::to_string(subgame_depth());
  if (options_.p1_infoset) id += ",infoset=" + HexEncode(*options_.p1_infoset);
  return id + ")";
}

GadgetState::GadgetState(std::shared_ptr<const GadgetGame> game)
    : game_(std::move(game)), base_(game_->base().NewRoot()) {}

GadgetState::GadgetState(const GadgetState& other)
    : game_(other.game_),
      stage_(other.stage_),
      base_(other.base_->Clone()),
      depth_(other.depth_),
      in_subgame_(other.in_subgame_),
      off_path_(other.off_path_),
      left_path_(other.left_path_) {}

bool GadgetState::TrunkP1Node() const {
  return stage_ == kFree && !in_subgame_ && !left_path_ &&
         base_->Role() == PlayerRole::kP1;
}

PlayerRole GadgetState::Role() const {
  switch (stage_) {
    case kRoot:
    case kFixedStart:
      return PlayerRole::kChance;
    case kFixed:
      if (base_->Role() == PlayerRole::kP2) return PlayerRole::kChance;
      return base_->Role();
    case kFree:
      if (TrunkP1Node()) return PlayerRole::kChance;
      return base_->Role();
  }
  return PlayerRole::kTerminal;
}

int GadgetState::NumActions() const {
  if (stage_ == kRoot) return static_cast<int>(game_->branches().size());
  if (stage_ == kFixedStart) {
    return static_cast<int>(game_->fixed_histories().size());
  }
  return base_->NumActions();
}

std::string GadgetState::ActionLabel(int action) const {
  if (stage_ == kRoot) {
    return game_->branches().at(action) == kFixed ? "fixed" : "free";
  }
  if (stage_ == kFixedStart) return "h" + std::to_string(action);
  return base_->ActionLabel(action);
}

void GadgetState::ApplyAction(int action) {
  if (action < 0 || action >= NumActions()) {
    throw InvalidArgument("action " + std::to_string(action) +
                          " out of range in the gadget");
  }
  if (stage_ == kRoot) {
    if (game_->branches()[action] == kFixed) {
      stage_ = kFixedStart;
    } else {
      stage_ = kFree;
      Track();
    }
    return;
  }
  if (stage_ == kFixedStart) {
    base_ = game_->fixed_histories()[action].history->Clone();
    depth_ = game_->subgame_depth();
    stage_ = kFixed;
    in_subgame_ = true;
    return;
  }
  base_->ApplyAction(action);
  ++depth_;
  if (stage_ == kFree) Track();
}

void GadgetState::Track() {
  off_path_ = false;
  if (in_subgame_ || left_path_) return;
  const std::vector<std::string>& path = game_->trunk().path;
  if (base_->PublicKey() != path[depth_]) {
    off_path_ = true;
    left_path_ = true;
  } else if (depth_ == game_->subgame_depth()) {
    in_subgame_ = true;
  }
}

std::vector<double> GadgetState::ChanceProbs() const {
  switch (stage_) {
    case kRoot:
      return game_->branch_probs();
    case kFixedStart:
      return game_->fixed_probs();
    case kFixed:
      if (base_->Role() == PlayerRole::kP2) {
        return game_->options().fixed_opponent->ActionProbs(*base_);
      }
      return base_->ChanceProbs();
    case kFree:
      if (TrunkP1Node()) return game_->trunk().p1.ActionProbs(*base_);
      return base_->ChanceProbs();
  }
  return {};
}

std::string GadgetState::InfosetKey(Player player) const {
  if (player == Player::kP1) {
    return stage_ == kRoot || stage_ == kFixedStart
               ? std::string()
               : base_->InfosetKey(player);
  }
  switch (stage_) {
    case kRoot:
      return "";
    case kFixedStart:
      return "F|";
    case kFixed:
      return "F|" + base_->InfosetKey(player);
    case kFree:
      return "R|" + base_->InfosetKey(player);
  }
  return "";
}

std::string GadgetState::PublicKey() const {
  if (stage_ == kRoot || stage_ == kFixedStart) return "";
  return base_->PublicKey();
}

std::string GadgetState::HistoryKey() const {
  switch (stage_) {
    case kRoot:
      return "";
    case kFixedStart:
      return "F";
    case kFixed:
      return "F" + base_->HistoryKey();
    case kFree:
      return "R" + base_->HistoryKey();
  }
  return "";
}

std::optional<Player> GadgetState::Mover() const {
  if (stage_ == kRoot || stage_ == kFixedStart) return std::nullopt;
  return base_->ActingPlayer();
}

bool GadgetState::InSubgame() const {
  return stage_ == kFixed || (stage_ == kFree && in_subgame_);
}

std::shared_ptr<const GadgetGame> MakeGadget(GamePtr base, TrunkRecord trunk,
                                             GadgetOptions options) {
  return std::make_shared<GadgetGame>(std::move(base), std::move(trunk),
                                      std::move(options));
}

}  // namespace abd
