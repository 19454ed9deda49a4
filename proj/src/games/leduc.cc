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
constexpr int kDeckSize = 6;
int Rank(int card) { return card / 2; }
}  // namespace

std::unique_ptr<State> LeducGame::NewRoot() const {
  return std::make_unique<LeducState>(shared_from_this());
}

double LeducGame::MaxUtility() const {
  return config_.ante + config_.max_bets_per_round * config_.round1_bet +
         config_.max_bets_per_round * config_.round2_bet;
}

double LeducGame::MinUtility() const { return -MaxUtility(); }

std::shared_ptr<const LeducGame> MakeLeduc(const LeducConfig& config) {
  return std::make_shared<LeducGame>(config);
}

LeducState::LeducState(std::shared_ptr<const LeducGame> game)
    : game_(std::move(game)) {
  contrib_[0] = contrib_[1] = game_->config().ante;
}

std::string LeducState::CardName(int card) {
  static const char* kNames[kDeckSize] = {"Js", "Jh", "Qs", "Qh", "Ks", "Kh"};
  return kNames[card];
}

PlayerRole LeducState::Role() const {
  if (finished_) return PlayerRole::kTerminal;
  if (cards_[0] < 0 || cards_[1] < 0) return PlayerRole::kChance;
  if (round_ == 2 && board_ < 0) return PlayerRole::kChance;
  return to_act_ == 0 ? PlayerRole::kP1 : PlayerRole::kP2;
}

std::vector<int> LeducState::ChanceOutcomes() const {
  std::vector<int> out;
  for (int c = 0; c < kDeckSize; ++c) {
    if (c != cards_[0] && c != cards_[1] && c != board_) out.push_back(c);
  }
  return out;
}

int LeducState::NumActions() const {
  switch (Role()) {
    case PlayerRole::kTerminal:
      return 0;
    case PlayerRole::kChance:
      return static_cast<int>(ChanceOutcomes().size());
    default:
      if (!FacingBet()) return 2;
      return bets_in_round_ < game_->config().max_bets_per_round ? 3 : 2;
  }
}

std::vector<double> LeducState::ChanceProbs() const {
  if (Role() != PlayerRole::kChance) return State::ChanceProbs();
  int n = static_cast<int>(ChanceOutcomes().size());
  return std::vector<double>(n, 1.0 / n);
}

BetKind LeducState::ActionKind(int action) const {
  if (!FacingBet()) return action == 0 ? BetKind::kCheck : BetKind::kBet;
  static constexpr BetKind kFacing[3] = {BetKind::kFold, BetKind::kCall,
                                         BetKind::kRaise};
  return kFacing[action];
}

std::string LeducState::ActionLabel(int action) const {
  if (action < 0 || action >= NumActions()) {
    throw InvalidArgument("illegal Leduc action " + std::to_string(action));
  }
  if (Role() == PlayerRole::kChance) {
    return CardName(ChanceOutcomes()[action]);
  }
  switch (ActionKind(action)) {
    case BetKind::kCheck:
      return "k";
    case BetKind::kBet:
      return "b";
    case BetKind::kFold:
      return "f";
    case BetKind::kCall:
      return "c";
    case BetKind::kRaise:
      return "r";
  }
  return "?";
}

void LeducState::EndRound() {
  if (round_ == 1) {
    round_ = 2;
    bets_in_round_ = 0;
    actions_in_round_ = 0;
    to_act_ = 0;
    betting_ += '/';
  } else {
    finished_ = true;
  }
}

void LeducState::ApplyAction(int action) {
  if (action < 0 || action >= NumActions()) {
    throw InvalidArgument("illegal Leduc action " + std::to_string(action));
  }
  history_.push_back(static_cast<char>(action));
  ++moves_;
  if (Role() == PlayerRole::kChance) {
    int card = ChanceOutcomes()[action];
    if (cards_[0] < 0) {
      cards_[0] = card;
    } else if (cards_[1] < 0) {
      cards_[1] = card;
    } else {
      board_ = card;
      betting_ += CardName(card) + ":";
    }
    return;
  }
  const int bet = round_ == 1 ? game_->config().round1_bet
                              : game_->config().round2_bet;
  const int me = to_act_;
  BetKind kind = ActionKind(action);
  betting_ += ActionLabel(action);
  ++actions_in_round_;
  switch (kind) {
    case BetKind::kCheck:
      if (actions_in_round_ >= 2) {
        EndRound();
        return;
      }
      break;
    case BetKind::kBet:
      contrib_[me] += bet;
      ++bets_in_round_;
      break;
    case BetKind::kRaise:
      contrib_[me] = contrib_[1 - me] + bet;
      ++bets_in_round_;
      break;
    case BetKind::kCall:
      contrib_[me] = contrib_[1 - me];
      EndRound();
      return;
    case BetKind::kFold:
      folded_ = me;
      finished_ = true;
      return;
  }
  to_act_ = 1 - me;
}

double LeducState::UtilityP1() const {
  if (!finished_) throw AbdError("UtilityP1() at a non-terminal history");
  if (folded_ == 0) return -contrib_[0];
  if (folded_ == 1) return contrib_[1];
  bool pair0 = Rank(cards_[0]) == Rank(board_);
  bool pair1 = Rank(cards_[1]) == Rank(board_);
  int winner = -1;
  if (pair0 != pair1) {
    winner = pair0 ? 0 : 1;
  } else if (Rank(cards_[0]) != Rank(cards_[1])) {
    winner = Rank(cards_[0]) > Rank(cards_[1]) ? 0 : 1;
  }
  if (winner < 0) return 0.0;
  return winner == 0 ? contrib_[1] : -contrib_[0];
}

std::string LeducState::PublicKey() const {
  return DepthPrefix(moves_) + "|" + betting_;
}

std::string LeducState::InfosetKey(Player player) const {
  int card = cards_[PlayerIndex(player)];
  return PublicKey() + "|" + (card < 0 ? std::string("-") : CardName(card));
}

}  // namespace abd
