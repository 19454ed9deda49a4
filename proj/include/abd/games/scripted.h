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

#ifndef ABD_GAMES_SCRIPTED_H_
#define ABD_GAMES_SCRIPTED_H_

#include <cstdint>
#include <string>
#include <vector>

#include "abd/efg/game.h"
#include "abd/efg/policy.h"
#include "abd/efg/portfolio.h"
#include "abd/games/battleships.h"

namespace abd {

// Battleships policy: uniform over legal placements (or a fixed top-left
// placement), and shots drawn uniformly from a preferred cell class with a
// fallback class used once the preferred cells are exhausted.
class ShooterPolicy : public Policy {
 public:
  enum class Rule {
    kUniform,    // Any legal cell.
    kAvoidCell,  // Any legal cell except `cell`, unless it is the only one.
    kNoisyAvoid, // Shoot `cell` w.p. epsilon if legal, else kAvoidCell.
    kEvenFirst,  // (x + y) even cells first.
    kOddFirst,   // (x + y) odd cells first.
  };

  ShooterPolicy(std::string name, Rule rule, int cell = 0,
                double epsilon = 0.0, bool place_top_left = false);

  std::vector<double> ActionProbs(const State& state) const override;
  int SampleAction(const State& state, Rng& rng) const override;
  std::string Name() const override { return name_; }

 private:
  // Distribution over cells as (cell mask, probability) pieces, each piece
  // uniform over its cells.
  struct Piece {
    uint64_t cells;
    double prob;
  };
  int Pieces(const BattleshipsState& s, Piece pieces[2]) const;
  std::vector<double> PlacementProbs(const BattleshipsState& s) const;

  std::string name_;
  Rule rule_;
  int cell_;
  double epsilon_;
  bool place_top_left_;
};

PolicyPtr CornerAvoider();
PolicyPtr NoisyCornerAvoider(double epsilon);
// Places a ship on the top-left cell whenever possible, shoots uniformly.
PolicyPtr TopLeftPlacer();

// Poker policies defined by one rule per betting round.
class BettingRulePolicy : public Policy {
 public:
  enum class Rule {
    kPassive,         // Check if legal, else fold.
    kAggressive,      // Bet or raise if legal, else call.
    kAggressiveFold,  // Bet or raise if legal, else fold.
  };
  BettingRulePolicy(std::string name, Rule round1, Rule round2)
      : name_(std::move(name)), round1_(round1), round2_(round2) {}
  std::vector<double> ActionProbs(const State& state) const override;
  std::string Name() const override { return name_; }

 private:
  std::string name_;
  Rule round1_;
  Rule round2_;
};

// S1: passive in round 1, aggressive in round 2. S2: the reverse. S3/S4: as
// S1/S2 but folding instead of calling when a raise is no longer legal.
PolicyPtr PokerScript(int index);

// Independent uniform draw from the simplex at every infoset, seeded by the
// infoset key so that the policy needs no table.
class RandomSeededPolicy : public Policy {
 public:
  explicit RandomSeededPolicy(uint64_t seed) : seed_(seed) {}
  std::vector<double> ActionProbs(const State& state) const override;
  std::string Name() const override {
    return "random:" + std::to_string(seed_);
  }

 private:
  uint64_t seed_;
};

// Builds the opponent named by a spec string: corner_avoider, noisy:<eps>,
// s1..s4, uniform, random:<seed>, file:<path>.
PolicyPtr MakeOpponent(const Game& game, const std::string& spec);

// Built-in portfolios: avoid4 (one strategy per avoided cell on a 2x2
// board), parity3 (uniform, even-first, odd-first) and leduc2
// (tight-passive, loose-aggressive).
Portfolio BuiltinPortfolio(const Game& game, const std::string& name,
                           Player owner);
std::vector<std::string> BuiltinPortfolioNames();

bool IsBattleships(const Game& game);
bool IsPoker(const Game& game);

}  // namespace abd

#endif  // ABD_GAMES_SCRIPTED_H_
