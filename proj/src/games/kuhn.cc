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

#include "abd/games/poker.h"

namespace abd {

namespace {
constexpr char kCardNames[] = {'J', 'Q', 'K'};
}  // namespace

std::unique_ptr<State> KuhnGame::NewRoot() const {
  return std::make_unique<KuhnState>(shared_from_this());
}

std::shared_ptr<const KuhnGame> MakeKuhn() {
  return std::make_shared<KuhnGame>();
}

bool KuhnState::IsTerminalBetting() const {
  return betting_ == "pp" || betting_ == "bp" || betting_ == "bb" ||
         betting_ == "pbp" || betting_ == "pbb";
}

PlayerRole KuhnState::Role() const {
  if (cards_[0] < 0 || cards_[1] < 0) return PlayerRole::kChance;
  if (IsTerminalBetting()) return PlayerRole::kTerminal;
  return betting_.size() % 2 == 0 ? PlayerRole::kP1 : PlayerRole::kP2;
}

int KuhnState::NumActions() const {
  if (cards_[0] < 0) return 3;
  if (cards_[1] < 0) return 2;
  return IsTerminalBetting() ? 0 : 2;
}

std::vector<double> KuhnState::ChanceProbs() const {
  if (Role() != PlayerRole::kChance) return State::ChanceProbs();
  int n = NumActions();
  return std::vector<double>(n, 1.0 / n);
}

BetKind KuhnState::ActionKind(int action) const {
  bool facing = !betting_.empty() && betting_.back() == 'b';
  if (facing) return action == 0 ? BetKind::kFold : BetKind::kCall;
  return action == 0 ? BetKind::kCheck : BetKind::kBet;
}

std::string KuhnState::ActionLabel(int action) const {
  if (action < 0 || action >= NumActions()) {
    throw InvalidArgument("illegal Kuhn action " + std::to_string(action));
  }
  if (cards_[0] < 0) return std::string(1, kCardNames[action]);
  if (cards_[1] < 0) {
    int seen = 0;
    for (int c = 0; c < 3; ++c) {
      if (c == cards_[0]) continue;
      if (seen++ == action) return std::string(1, kCardNames[c]);
    }
  }
  return action == 0 ? "p" : "b";
}

void KuhnState::ApplyAction(int action) {
  if (action < 0 || action >= NumActions()) {
    throw InvalidArgument("illegal Kuhn action " + std::to_string(action));
  }
  history_.push_back(static_cast<char>(action));
  if (cards_[0] < 0) {
    cards_[0] = action;
  } else if (cards_[1] < 0) {
    cards_[1] = action >= cards_[0] ? action + 1 : action;
  } else {
    betting_.push_back(action == 0 ? 'p' : 'b');
  }
}

double KuhnState::UtilityP1() const {
  if (!IsTerminalBetting()) throw AbdError("UtilityP1() at non-terminal");
  if (betting_ == "bp") return 1.0;
  if (betting_ == "pbp") return -1.0;
  double stake = betting_ == "pp" ? 1.0 : 2.0;
  return cards_[0] > cards_[1] ? stake : -stake;
}

std::string KuhnState::PublicKey() const {
  return DepthPrefix(static_cast<int>(history_.size())) + "|" + betting_;
}

std::string KuhnState::InfosetKey(Player player) const {
  int card = cards_[PlayerIndex(player)];
  return PublicKey() + "|" + (card < 0 ? '-' : kCardNames[card]);
}

}  // namespace abd
