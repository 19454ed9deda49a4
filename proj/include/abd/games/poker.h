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

#ifndef ABD_GAMES_POKER_H_
#define ABD_GAMES_POKER_H_

#include <memory>
#include <string>
#include <vector>

#include "abd/efg/game.h"

namespace abd {

enum class BetKind { kCheck, kBet, kFold, kCall, kRaise };

// Betting view shared by the poker games, used by scripted opponents.
class PokerState : public State {
 public:
  // 1-based betting round.
  virtual int BettingRound() const = 0;
  virtual BetKind ActionKind(int action) const = 0;
};

struct LeducConfig {
  int ante = 1;
  int round1_bet = 2;
  int round2_bet = 4;
  // Total bets per round, counting the opening bet.
  int max_bets_per_round = 2;
};

// Six-card deck (J, Q, K in two suits). Each player antes, receives a
// private card, bets (P1 first), then a public board card is dealt and a
// second betting round follows. A pair with the board wins at showdown,
// otherwise the higher rank; equal ranks split.
class LeducGame : public Game, public std::enable_shared_from_this<LeducGame> {
 public:
  explicit LeducGame(LeducConfig config = {}) : config_(config) {}
  std::unique_ptr<State> NewRoot() const override;
  std::string Id() const override { return "leduc"; }
  double MinUtility() const override;
  double MaxUtility() const override;
  const LeducConfig& config() const { return config_; }

 private:
  LeducConfig config_;
};

std::shared_ptr<const LeducGame> MakeLeduc(const LeducConfig& config = {});

class LeducState : public PokerState {
 public:
  explicit LeducState(std::shared_ptr<const LeducGame> game);

  PlayerRole Role() const override;
  int NumActions() const override;
  std::string ActionLabel(int action) const override;
  void ApplyAction(int action) override;
  std::unique_ptr<State> Clone() const override {
    return std::make_unique<LeducState>(*this);
  }
  std::vector<double> ChanceProbs() const override;
  double UtilityP1() const override;
  std::string InfosetKey(Player player) const override;
  std::string PublicKey() const override;
  std::string HistoryKey() const override { return history_; }

  int BettingRound() const override { return round_; }
  BetKind ActionKind(int action) const override;

  // Cards are 0..5; rank = card / 2, suit = card % 2. -1 if not dealt.
  int card(Player p) const { return cards_[PlayerIndex(p)]; }
  int board() const { return board_; }
  int contribution(Player p) const { return contrib_[PlayerIndex(p)]; }
  static std::string CardName(int card);

 private:
  bool FacingBet() const { return contrib_[0] != contrib_[1]; }
  std::vector<int> ChanceOutcomes() const;
  void EndRound();

  std::shared_ptr<const LeducGame> game_;
  int cards_[2] = {-1, -1};
  int board_ = -1;
  int round_ = 1;
  int contrib_[2];
  int bets_in_round_ = 0;
  int actions_in_round_ = 0;
  int to_act_ = 0;
  int folded_ = -1;
  bool finished_ = false;
  int moves_ = 0;
  std::string betting_;  // Public betting, '/' separates the rounds.
  std::string history_;
};

// Three-card game (J, Q, K), ante 1, single bet of 1. Labels: p(ass), b(et).
class KuhnGame : public Game, public std::enable_shared_from_this<KuhnGame> {
 public:
  std::unique_ptr<State> NewRoot() const override;
  std::string Id() const override { return "kuhn"; }
  double MinUtility() const override { return -2.0; }
  double MaxUtility() const override { return 2.0; }
};

std::shared_ptr<const KuhnGame> MakeKuhn();

class KuhnState : public PokerState {
 public:
  explicit KuhnState(std::shared_ptr<const KuhnGame> game)
      : game_(std::move(game)) {}

  PlayerRole Role() const override;
  int NumActions() const override;
  std::string ActionLabel(int action) const override;
  void ApplyAction(int action) override;
  std::unique_ptr<State> Clone() const override {
    return std::make_unique<KuhnState>(*this);
  }
  std::vector<double> ChanceProbs() const override;
  double UtilityP1() const override;
  std::string InfosetKey(Player player) const override;
  std::string PublicKey() const override;
  std::string HistoryKey() const override { return history_; }

  int BettingRound() const override { return 1; }
  BetKind ActionKind(int action) const override;

 private:
  bool IsTerminalBetting() const;

  std::shared_ptr<const KuhnGame> game_;
  int cards_[2] = {-1, -1};
  std::string betting_;
  std::string history_;
};

}  // namespace abd

#endif  // ABD_GAMES_POKER_H_
