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

#include "abd/games/scripted.h"

#include <bit>
#include <cmath>
#include <cstdlib>

#include "abd/efg/random.h"
#include "abd/efg/strategy_io.h"
#include "abd/games/poker.h"

namespace abd {

namespace {

const BattleshipsState& AsBattleships(const State& state,
                                      const std::string& policy) {
  const auto* s = dynamic_cast<const BattleshipsState*>(&state.Base());
  if (s == nullptr) {
    throw InvalidArgument("policy '" + policy +
                          "' only applies to Battleships");
  }
  return *s;
}

const PokerState& AsPoker(const State& state, const std::string& policy) {
  const auto* s = dynamic_cast<const PokerState*>(&state.Base());
  if (s == nullptr) {
    throw InvalidArgument("policy '" + policy + "' only applies to poker");
  }
  return *s;
}

uint64_t NthSetBit(uint64_t mask, uint64_t n) {
  for (uint64_t i = 0; i < n; ++i) mask &= mask - 1;
  return static_cast<uint64_t>(std::countr_zero(mask));
}

}  // namespace

ShooterPolicy::ShooterPolicy(std::string name, Rule rule, int cell,
                             double epsilon, bool place_top_left)
    : name_(std::move(name)),
      rule_(rule),
      cell_(cell),
      epsilon_(epsilon),
      place_top_left_(place_top_left) {
  if (epsilon < 0.0 || epsilon > 1.0) {
    throw InvalidArgument("noise probability must lie in [0, 1]");
  }
}

int ShooterPolicy::Pieces(const BattleshipsState& s, Piece pieces[2]) const {
  const uint64_t legal = s.LegalShotMask();
  const uint64_t bit = uint64_t{1} << cell_;
  auto preferred = [&](uint64_t pref) {
    pieces[0] = {pref != 0 ? pref : legal, 1.0};
    return 1;
  };
  switch (rule_) {
    case Rule::kUniform:
      pieces[0] = {legal, 1.0};
      return 1;
    case Rule::kAvoidCell:
      return preferred(legal & ~bit);
    case Rule::kNoisyAvoid: {
      uint64_t rest = legal & ~bit;
      if ((legal & bit) == 0 || rest == 0 || epsilon_ <= 0.0) {
        return preferred(rest);
      }
      pieces[0] = {bit, epsilon_};
      pieces[1] = {rest, 1.0 - epsilon_};
      return epsilon_ >= 1.0 ? 1 : 2;
    }
    case Rule::kEvenFirst:
      return preferred(legal & s.game().even_mask());
    case Rule::kOddFirst:
      return preferred(legal & ~s.game().even_mask());
  }
  return 0;
}

std::vector<double> ShooterPolicy::PlacementProbs(
    const BattleshipsState& s) const {
  const auto& legal = s.legal_placements();
  const int n = static_cast<int>(legal.size());
  if (place_top_left_) {
    const auto& candidates = s.game().candidates(s.current_ship());
    for (int a = 0; a < n; ++a) {
      if (candidates[legal[a]].mask & 1) {
        std::vector<double> probs(n, 0.0);
        probs[a] = 1.0;
        return probs;
      }
    }
  }
  return std::vector<double>(n, 1.0 / n);
}

std::vector<double> ShooterPolicy::ActionProbs(const State& state) const {
  const BattleshipsState& s = AsBattleships(state, name_);
  if (s.InPlacement()) return PlacementProbs(s);
  Piece pieces[2];
  int count = Pieces(s, pieces);
  uint64_t legal = s.LegalShotMask();
  std::vector<double> probs(std::popcount(legal), 0.0);
  for (int i = 0; i < count; ++i) {
    double each = pieces[i].prob / std::popcount(pieces[i].cells);
    for (uint64_t m = pieces[i].cells; m != 0; m &= m - 1) {
      probs[s.ShotAction(std::countr_zero(m))] += each;
    }
  }
  return probs;
}

int ShooterPolicy::SampleAction(const State& state, Rng& rng) const {
  const BattleshipsState& s = AsBattleships(state, name_);
  if (s.InPlacement()) return SampleIndex(PlacementProbs(s), rng);
  Piece pieces[2];
  int count = Pieces(s, pieces);
  int chosen = 0;
  if (count == 2 && Uniform01(rng) >= pieces[0].prob) chosen = 1;
  uint64_t cells = pieces[chosen].cells;
  uint64_t cell = NthSetBit(cells, UniformInt(rng, std::popcount(cells)));
  return s.ShotAction(static_cast<int>(cell));
}

PolicyPtr CornerAvoider() {
  return std::make_shared<ShooterPolicy>("corner_avoider",
                                         ShooterPolicy::Rule::kAvoidCell, 0);
}

PolicyPtr NoisyCornerAvoider(double epsilon) {
  return std::make_shared<ShooterPolicy>(
      "noisy:" + FormatProb(epsilon), ShooterPolicy::Rule::kNoisyAvoid, 0,
      epsilon);
}

PolicyPtr TopLeftPlacer() {
  return std::make_shared<ShooterPolicy>(
      "top_left_placer", ShooterPolicy::Rule::kUniform, 0, 0.0, true);
}

std::vector<double> BettingRulePolicy::ActionProbs(const State& state) const {
  const PokerState& s = AsPoker(state, name_);
  const int n = s.NumActions();
  Rule rule = s.BettingRound() == 1 ? round1_ : round2_;
  auto find = [&](BetKind kind) {
    for (int a = 0; a < n; ++a) {
      if (s.ActionKind(a) == kind) return a;
    }
    return -1;
  };
  int choice = -1;
  switch (rule) {
    case Rule::kPassive:
      choice = find(BetKind::kCheck);
      if (choice < 0) choice = find(BetKind::kFold);
      break;
    case Rule::kAggressive:
    case Rule::kAggressiveFold:
      choice = find(BetKind::kBet);
      if (choice < 0) choice = find(BetKind::kRaise);
      if (choice < 0) {
        choice = find(rule == Rule::kAggressive ? BetKind::kCall
                                                : BetKind::kFold);
      }
      break;
  }
  if (choice < 0) throw AbdError("policy '" + name_ + "' found no action");
  std::vector<double> probs(n, 0.0);
  probs[choice] = 1.0;
  return probs;
}

PolicyPtr PokerScript(int index) {
  using R = BettingRulePolicy::Rule;
  switch (index) {
    case 1:
      return std::make_shared<BettingRulePolicy>("s1", R::kPassive,
                                                 R::kAggressive);
    case 2:
      return std::make_shared<BettingRulePolicy>("s2", R::kAggressive,
                                                 R::kPassive);
    case 3:
      return std::make_shared<BettingRulePolicy>("s3", R::kPassive,
                                                 R::kAggressiveFold);
    case 4:
      return std::make_shared<BettingRulePolicy>("s4", R::kAggressiveFold,
                                                 R::kPassive);
    default:
      throw InvalidArgument("poker scripts are s1..s4");
  }
}

std::vector<double> RandomSeededPolicy::ActionProbs(const State& state) const {
  const int n = state.NumActions();
  const uint64_t base =
      DeriveSeed(seed_, Fnv1a64(state.ActingInfosetKey()), 0);
  std::vector<double> probs(n);
  double total = 0.0;
  for (int a = 0; a < n; ++a) {
    double u = static_cast<double>(SplitMix64(base + a) >> 11) * 0x1.0p-53;
    probs[a] = -std::log1p(-u);
    total += probs[a];
  }
  for (double& p : probs) p = total > 0.0 ? p / total : 1.0 / n;
  return probs;
}

bool IsBattleships(const Game& game) {
  return dynamic_cast<const BattleshipsGame*>(&game) != nullptr;
}

bool IsPoker(const Game& game) {
  return dynamic_cast<const LeducGame*>(&game) != nullptr ||
         dynamic_cast<const KuhnGame*>(&game) != nullptr;
}

namespace {

double ParseNumber(const std::string& text, const std::string& what) {
  char* end = nullptr;
  double v = std::strtod(text.c_str(), &end);
  if (text.empty() || *end != '\0') {
    throw InvalidArgument("bad number '" + text + "' in " + what);
  }
  return v;
}

}  // namespace

PolicyPtr MakeOpponent(const Game& game, const std::string& spec) {
  auto require = [&](bool ok, const char* kind) {
    if (!ok) {
      throw InvalidArgument("opponent '" + spec + "' needs a " + kind +
                            " game, got " + game.Id());
    }
  };
  if (spec == "uniform") return std::make_shared<UniformPolicy>();
  if (spec == "corner_avoider") {
    require(IsBattleships(game), "Battleships");
    return CornerAvoider();
  }
  if (spec.rfind("noisy:", 0) == 0) {
    require(IsBattleships(game), "Battleships");
    return NoisyCornerAvoider(ParseNumber(spec.substr(6), spec));
  }
  if (spec.size() == 2 && spec[0] == 's' && spec[1] >= '1' && spec[1] <= '4') {
    require(IsPoker(game), "poker");
    return PokerScript(spec[1] - '0');
  }
  if (spec.rfind("random:", 0) == 0) {
    std::string digits = spec.substr(7);
    char* end = nullptr;
    unsigned long long seed = std::strtoull(digits.c_str(), &end, 10);
    if (digits.empty() || *end != '\0') {
      throw InvalidArgument("bad seed in opponent '" + spec + "'");
    }
    return std::make_shared<RandomSeededPolicy>(seed);
  }
  if (spec.rfind("file:", 0) == 0) {
    StoredStrategy stored = LoadStrategy(spec.substr(5));
    if (stored.game_id != game.Id()) {
      throw InvalidArgument("strategy file is for game '" + stored.game_id +
                            "', expected '" + game.Id() + "'");
    }
    if (stored.player != Player::kP2) {
      throw InvalidArgument("opponent strategy file must be for player 2");
    }
    stored.policy.set_missing(TabularPolicy::Missing::kError);
    return std::make_shared<TabularPolicy>(std::move(stored.policy));
  }
  throw InvalidArgument(
      "unknown opponent '" + spec +
      "' (expected corner_avoider, noisy:<eps>, s1..s4, uniform, "
      "random:<seed> or file:<path>)");
}

std::vector<std::string> BuiltinPortfolioNames() {
  return {"avoid4", "parity3", "leduc2"};
}

Portfolio BuiltinPortfolio(const Game& game, const std::string& name,
                           Player owner) {
  Portfolio portfolio;
  portfolio.owner = owner;
  portfolio.name = name;
  if (name == "avoid4") {
    const auto* bs = dynamic_cast<const BattleshipsGame*>(&game);
    if (bs == nullptr || bs->num_cells() != 4) {
      throw InvalidArgument("portfolio avoid4 needs a 4-cell Battleships board");
    }
    for (int cell = 0; cell < 4; ++cell) {
      portfolio.entries.push_back(std::make_shared<ShooterPolicy>(
          "avoid_" + bs->CellLabel(cell), ShooterPolicy::Rule::kAvoidCell,
          cell));
    }
  } else if (name == "parity3") {
    if (!IsBattleships(game)) {
      throw InvalidArgument("portfolio parity3 needs a Battleships game");
    }
    using R = ShooterPolicy::Rule;
    portfolio.entries.push_back(
        std::make_shared<ShooterPolicy>("uniform", R::kUniform));
    portfolio.entries.push_back(
        std::make_shared<ShooterPolicy>("even_first", R::kEvenFirst));
    portfolio.entries.push_back(
        std::make_shared<ShooterPolicy>("odd_first", R::kOddFirst));
  } else if (name == "leduc2") {
    if (!IsPoker(game)) {
      throw InvalidArgument("portfolio leduc2 needs a poker game");
    }
    using R = BettingRulePolicy::Rule;
    portfolio.entries.push_back(std::make_shared<BettingRulePolicy>(
        "tight_passive", R::kPassive, R::kPassive));
    portfolio.entries.push_back(std::make_shared<BettingRulePolicy>(
        "loose_aggressive", R::kAggressive, R::kAggressive));
  } else {
    std::string names;
    for (const auto& n : BuiltinPortfolioNames()) {
      names += (names.empty() ? "" : ", ") + n;
    }
    throw InvalidArgument("unknown portfolio '" + name + "' (available: " +
                          names + ")");
  }
  return portfolio;
}

}  // namespace abd
