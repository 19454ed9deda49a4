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


#include "abd/robust/rbadapt.h"

#include <cmath>
#include <utility>

namespace abd {

void ValidateRobustSpec(const RobustSpec& spec) {
  if (!(spec.p >= 0.0 && spec.p <= 1.0)) {
    throw InvalidArgument("p must lie in [0, 1], got " + FormatProb(spec.p));
  }
  if (spec.fixed_opponent == nullptr) {
    throw InvalidArgument("robust spec needs a fixed opponent strategy");
  }
}

RbAdaptGame::RbAdaptGame(GamePtr base, RobustSpec spec)
    : base_(std::move(base)), spec_(std::move(spec)) {
  ValidateRobustSpec(spec_);
}

std::unique_ptr<State> RbAdaptGame::NewRoot() const {
  return std::make_unique<RbAdaptState>(shared_from_this());
}

std::string RbAdaptGame::Id() const {
  return "rbadapt(" + base_->Id() + ",p=" + FormatProb(spec_.p) + "," +
         spec_.fixed_opponent->Name() + ")";
}

RbAdaptState::RbAdaptState(std::shared_ptr<const RbAdaptGame> game)
    : game_(std::move(game)), base_(game_->base().NewRoot()) {}

RbAdaptState::RbAdaptState(const RbAdaptState& other)
    : game_(other.game_), branch_(other.branch_), base_(other.base_->Clone()) {}

PlayerRole RbAdaptState::Role() const {
  if (branch_ == kRoot) return PlayerRole::kChance;
  PlayerRole role = base_->Role();
  if (branch_ == kFixed && role == PlayerRole::kP2) return PlayerRole::kChance;
  return role;
}

int RbAdaptState::NumActions() const {
  return branch_ == kRoot ? 2 : base_->NumActions();
}

std::string RbAdaptState::ActionLabel(int action) const {
  if (branch_ == kRoot) return action == 0 ? "fixed" : "free";
  return base_->ActionLabel(action);
}

void RbAdaptState::ApplyAction(int action) {
  if (branch_ == kRoot) {
    if (action != 0 && action != 1) {
      throw InvalidArgument("robust root has actions 0 and 1");
    }
    branch_ = action == 0 ? kFixed : kFree;
    return;
  }
  base_->ApplyAction(action);
}

std::vector<double> RbAdaptState::ChanceProbs() const {
  if (branch_ == kRoot) return {game_->spec().p, 1.0 - game_->spec().p};
  if (branch_ == kFixed && base_->Role() == PlayerRole::kP2) {
    return game_->spec().fixed_opponent->ActionProbs(*base_);
  }
  return base_->ChanceProbs();
}

std::string RbAdaptState::InfosetKey(Player player) const {
  if (player == Player::kP1) return base_->InfosetKey(player);
  if (branch_ == kRoot) return "";
  return (branch_ == kFixed ? kFixedTag : kFreeTag) +
         base_->InfosetKey(player);
}

std::string RbAdaptState::PublicKey() const { return base_->PublicKey(); }

std::string RbAdaptState::HistoryKey() const {
  if (branch_ == kRoot) return "";
  return (branch_ == kFixed ? "F" : "R") + base_->HistoryKey();
}

std::optional<Player> RbAdaptState::Mover() const {
  if (branch_ == kRoot) return std::nullopt;
  return base_->ActingPlayer();
}

std::shared_ptr<const RbAdaptGame> MakeRbAdapt(GamePtr base, RobustSpec spec) {
  return std::make_shared<RbAdaptGame>(std::move(base), std::move(spec));
}

}  // namespace abd
