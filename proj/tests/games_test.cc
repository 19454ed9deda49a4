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

#include <bit>
#include <cstdio>
#include <fstream>

#include "abd/efg/strategy_io.h"
#include "abd/efg/traversal.h"
#include "abd/games/battleships.h"
#include "abd/games/game_config.h"
#include "abd/games/poker.h"
#include "abd/games/scripted.h"
#include "abd/games/small_games.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace abd {
namespace {

std::shared_ptr<const BattleshipsGame> Board(int w, int h,
                                             std::vector<ShipShape> ships) {
  BattleshipsConfig c;
  c.width = w;
  c.height = h;
  c.ships = std::move(ships);
  return MakeBattleships(c);
}

// Moves a fresh 2x2 state past both placements.
std::unique_ptr<State> AfterPlacement(const Game& game, int p1_cell,
                                      int p2_cell) {
  return StateFromActions(game, {p1_cell, p2_cell});
}

TEST(BattleshipsTest, RootHasFourPlacements) {
  auto game = MakeBattleships({});
  auto root = game->NewRoot();
  EXPECT_EQ(root->Role(), PlayerRole::kP1);
  EXPECT_EQ(root->NumActions(), 4);
  EXPECT_EQ(root->ActionLabel(0), "at_x0y0");
}

TEST(BattleshipsTest, PlacementCountMatchesEnumeration) {
  auto game = Board(3, 3, {{2, 1}});
  EXPECT_EQ(testing_oracles::CountPlacements(3, 3, 2, 1), 12);
  EXPECT_EQ(game->NewRoot()->NumActions(), 12);
  auto square = Board(3, 3, {{2, 2}});
  EXPECT_EQ(square->NewRoot()->NumActions(),
            testing_oracles::CountPlacements(3, 3, 2, 2));
}

TEST(BattleshipsTest, RejectsUnplaceableShips) {
  EXPECT_THROW(Board(2, 2, {{3, 1}}), InvalidArgument);
  EXPECT_THROW(Board(2, 2, {{2, 2}, {1, 1}}), InvalidArgument);
}

TEST(BattleshipsTest, SecondShipAvoidsOverlapAndDeadEnds) {
  auto game = Board(3, 1, {{2, 1}, {1, 1}});
  auto root = game->NewRoot();
  // The 2x1 ship fits at x0 or x1; both leave one free cell.
  EXPECT_EQ(root->NumActions(), 2);
  auto s = root->Child(0);
  EXPECT_EQ(s->NumActions(), 1);
  EXPECT_EQ(s->ActionLabel(0), "at_x2y0");
}

TEST(BattleshipsTest, HitsArePublicAndSinkingEnds) {
  auto game = MakeBattleships({});
  auto s = AfterPlacement(*game, 0, 3);
  EXPECT_EQ(s->Role(), PlayerRole::kP1);
  std::string before = s->PublicKey();
  s->ApplyAction(0);  // P1 misses at x0y0.
  EXPECT_NE(s->PublicKey(), before);
  EXPECT_EQ(s->InfosetKey(Player::kP1).substr(0, s->PublicKey().size()),
            s->PublicKey());
  EXPECT_EQ(s->Role(), PlayerRole::kP2);
  s->ApplyAction(1);  // P2 misses at x1y0.
  EXPECT_EQ(s->NumActions(), 3);
  s->ApplyAction(2);  // P1 shoots x1y1 (index 2 of x1y0, x0y1, x1y1): hit.
  ASSERT_TRUE(s->IsTerminal());
  EXPECT_EQ(s->UtilityP1(), 1.0);
}

TEST(BattleshipsTest, InfosetsHidePlacements) {
  auto game = MakeBattleships({});
  auto a = AfterPlacement(*game, 0, 1);
  auto b = AfterPlacement(*game, 0, 2);
  EXPECT_EQ(a->InfosetKey(Player::kP1), b->InfosetKey(Player::kP1));
  EXPECT_NE(a->InfosetKey(Player::kP2), b->InfosetKey(Player::kP2));
  EXPECT_EQ(a->PublicKey(), b->PublicKey());
}

TEST(BattleshipsTest, ShooterOrderAntiSymmetry) {
  UniformPolicy u;
  BattleshipsConfig c;
  c.first_shooter = Player::kP2;
  auto swapped = MakeBattleships(c);
  double oracle = testing_oracles::TwoByTwoUniformValue(Player::kP2);
  EXPECT_NEAR(oracle, -0.25, 1e-12);
  EXPECT_NEAR(ExpectedUtility(*swapped, u, u), oracle, 1e-12);
  EXPECT_NEAR(ExpectedUtility(*MakeBattleships({}), u, u), -oracle, 1e-12);
}

TEST(ScriptedTest, CornerAvoiderDistribution) {
  auto game = MakeBattleships({});
  auto s = StateFromActions(*game, {3, 0, 1});  // P2 to shoot, 4 cells free.
  ASSERT_EQ(s->Role(), PlayerRole::kP2);
  auto probs = CornerAvoider()->ActionProbs(*s);
  ASSERT_EQ(probs.size(), 4u);
  EXPECT_DOUBLE_EQ(probs[0], 0.0);
  for (int a = 1; a < 4; ++a) EXPECT_DOUBLE_EQ(probs[a], 1.0 / 3.0);
  // Only the top-left cell left for P2, who shoots first here.
  BattleshipsConfig c;
  c.first_shooter = Player::kP2;
  auto t = StateFromActions(*MakeBattleships(c), {0, 3, 1, 0, 1, 0, 1, 0});
  ASSERT_EQ(t->Role(), PlayerRole::kP2);
  ASSERT_EQ(t->NumActions(), 1);
  EXPECT_DOUBLE_EQ(CornerAvoider()->ActionProbs(*t)[0], 1.0);
}

TEST(ScriptedTest, NoisyCornerAvoider) {
  auto game = MakeBattleships({});
  auto s = StateFromActions(*game, {3, 0, 1});
  auto probs = NoisyCornerAvoider(0.05)->ActionProbs(*s);
  EXPECT_DOUBLE_EQ(probs[0], 0.05);
  for (int a = 1; a < 4; ++a) EXPECT_NEAR(probs[a], 0.95 / 3.0, 1e-15);
}

TEST(ScriptedTest, SampleActionFollowsProbabilities) {
  auto game = MakeBattleships({});
  auto s = StateFromActions(*game, {3, 0, 1});
  Rng rng(7);
  std::vector<int> counts(4, 0);
  auto policy = NoisyCornerAvoider(0.2);
  for (int i = 0; i < 40000; ++i) ++counts[policy->SampleAction(*s, rng)];
  EXPECT_NEAR(counts[0] / 40000.0, 0.2, 0.01);
  EXPECT_NEAR(counts[3] / 40000.0, 0.8 / 3.0, 0.01);
}

TEST(ScriptedTest, TopLeftPlacementWinsAgainstCornerAvoider) {
  auto game = MakeBattleships({});
  // Any shooting policy works once the ship sits on the top-left cell.
  EXPECT_NEAR(ExpectedUtility(*game, *TopLeftPlacer(), *CornerAvoider()), 1.0,
              1e-12);
  RandomSeededPolicy random(3);
  TabularPolicy shooter = Tabulate(*game, Player::kP1, random);
  auto root = game->NewRoot();
  shooter.SetAt(*root, {1.0, 0.0, 0.0, 0.0});
  EXPECT_NEAR(ExpectedUtility(*game, shooter, *CornerAvoider()), 1.0, 1e-12);
}

TEST(ScriptedTest, ScriptsAreValidStrategies) {
  auto bs = Board(3, 1, {{2, 1}});
  for (const auto& policy :
       {CornerAvoider(), NoisyCornerAvoider(0.05), TopLeftPlacer()}) {
    EXPECT_NO_THROW(Tabulate(*bs, Player::kP2, *policy)) << policy->Name();
  }
  for (const auto& entry : BuiltinPortfolio(*bs, "parity3", Player::kP1).entries) {
    EXPECT_NO_THROW(Tabulate(*bs, Player::kP1, *entry)) << entry->Name();
  }
  auto leduc = MakeLeduc();
  for (int i = 1; i <= 4; ++i) {
    EXPECT_NO_THROW(Tabulate(*leduc, Player::kP2, *PokerScript(i)));
  }
}

TEST(ScriptedTest, PokerScriptRules) {
  auto leduc = MakeLeduc();
  // Deal, then P1 bets: P2 faces a bet in round 1.
  auto s = StateFromActions(*leduc, {0, 0, 1});
  ASSERT_EQ(s->Role(), PlayerRole::kP2);
  auto probs = PokerScript(1)->ActionProbs(*s);
  EXPECT_EQ(probs, (std::vector<double>{1.0, 0.0, 0.0}));  // Fold.
  probs = PokerScript(2)->ActionProbs(*s);
  EXPECT_EQ(probs, (std::vector<double>{0.0, 0.0, 1.0}));  // Raise.
  // After bet and raise the cap is reached: S2 calls, S4 folds.
  auto capped = StateFromActions(*leduc, {0, 0, 1, 2});
  ASSERT_EQ(capped->Role(), PlayerRole::kP1);
  ASSERT_EQ(capped->NumActions(), 2);
  EXPECT_EQ(PokerScript(2)->ActionProbs(*capped),
            (std::vector<double>{0.0, 1.0}));
  EXPECT_EQ(PokerScript(4)->ActionProbs(*capped),
            (std::vector<double>{1.0, 0.0}));
}

TEST(ScriptedTest, PokerScriptsMatchIndependentEvaluator) {
  auto leduc = MakeLeduc();
  UniformPolicy u;
  for (int i = 1; i <= 4; ++i) {
    bool r1_aggressive = i == 2 || i == 4;
    bool fold_at_cap = i >= 3;
    double oracle = testing_oracles::LeducValue(
        [&](int player, int round, const std::string&, int, int,
            const std::string& legal) {
          if (player == 0) {
            return std::vector<double>(legal.size(), 1.0 / legal.size());
          }
          bool aggressive = (round == 1) == r1_aggressive;
          return testing_oracles::LeducScriptedChoice(legal, aggressive,
                                                      fold_at_cap);
        });
    EXPECT_NEAR(ExpectedUtility(*leduc, u, *PokerScript(i)), oracle, 1e-12)
        << "s" << i;
  }
}

TEST(ScriptedTest, RandomSeededIsDeterministic) {
  auto kuhn = MakeKuhn();
  std::string a = StrategyToString(
      Tabulate(*kuhn, Player::kP2, RandomSeededPolicy(42)), "kuhn",
      Player::kP2);
  std::string b = StrategyToString(
      Tabulate(*kuhn, Player::kP2, RandomSeededPolicy(42)), "kuhn",
      Player::kP2);
  std::string c = StrategyToString(
      Tabulate(*kuhn, Player::kP2, RandomSeededPolicy(43)), "kuhn",
      Player::kP2);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
}

TEST(PortfolioTest, Avoid4FirstEntry) {
  auto game = MakeBattleships({});
  Portfolio p = BuiltinPortfolio(*game, "avoid4", Player::kP1);
  ASSERT_EQ(p.size(), 4);
  auto s = AfterPlacement(*game, 0, 0);
  auto probs = p.at(0).ActionProbs(*s);
  EXPECT_DOUBLE_EQ(probs[0], 0.0);
  for (int a = 1; a < 4; ++a) EXPECT_DOUBLE_EQ(probs[a], 1.0 / 3.0);
}

TEST(PortfolioTest, ParityEvenFirstOnFiveByFive) {
  auto game = Board(5, 5, {{2, 2}, {2, 2}});
  int even = 0;
  for (int y = 0; y < 5; ++y) {
    for (int x = 0; x < 5; ++x) even += (x + y) % 2 == 0;
  }
  EXPECT_EQ(even, 13);
  EXPECT_EQ(std::popcount(game->even_mask()), even);
  Portfolio p = BuiltinPortfolio(*game, "parity3", Player::kP1);
  auto s = StateFromActions(*game, {0, 0, 0, 0});
  ASSERT_EQ(s->Role(), PlayerRole::kP1);
  ASSERT_FALSE(static_cast<const BattleshipsState&>(*s).InPlacement());
  auto probs = p.at(1).ActionProbs(*s);
  int positive = 0;
  for (double q : probs) {
    if (q > 0) {
      ++positive;
      EXPECT_DOUBLE_EQ(q, 1.0 / 13.0);
    }
  }
  EXPECT_EQ(positive, 13);
}

TEST(PortfolioTest, Leduc2TightPassiveFolds) {
  auto leduc = MakeLeduc();
  Portfolio p = BuiltinPortfolio(*leduc, "leduc2", Player::kP2);
  auto s = StateFromActions(*leduc, {0, 0, 1});
  EXPECT_EQ(p.at(0).ActionProbs(*s), (std::vector<double>{1.0, 0.0, 0.0}));
  EXPECT_THROW(BuiltinPortfolio(*leduc, "nope", Player::kP1), InvalidArgument);
}

TEST(LeducTest, FoldOnlyFacingBetAndTie) {
  auto leduc = MakeLeduc();
  auto s = StateFromActions(*leduc, {0, 0});  // P1 Js, P2 Jh.
  EXPECT_EQ(s->ActionLabels(), (std::vector<std::string>{"k", "b"}));
  // Check, check, board Qs (index 0 of the 4 remaining: Qs Qh Ks Kh),
  // check, check: both hold a jack, tie.
  for (int a : {0, 0, 0, 0, 0}) s->ApplyAction(a);
  ASSERT_TRUE(s->IsTerminal());
  EXPECT_EQ(s->UtilityP1(), 0.0);
}

TEST(LeducTest, PairWins) {
  auto leduc = MakeLeduc();
  // P1 Js, P2 Qs (index 1 of Jh Qs Qh Ks Kh), bet/call, board Jh.
  auto s = StateFromActions(*leduc, {0, 1, 1, 1, 0, 0, 0});
  ASSERT_TRUE(s->IsTerminal());
  EXPECT_EQ(s->UtilityP1(), 3.0);
}

TEST(ConfigTest, ParsesGameKeysAndRejectsUnknown) {
  auto entries = ParseKeyValues(
      "# comment\ngame = battleships\nwidth = 3\nheight = 2\n"
      "ships = 2x1\nfirst_shooter = p2\nopponent = noisy:0.05\n",
      "cfg");
  GameConfig c = GameConfigFromEntries(entries, "cfg");
  EXPECT_EQ(c.battleships.width, 3);
  EXPECT_EQ(c.battleships.first_shooter, Player::kP2);
  EXPECT_EQ(c.opponent, "noisy:0.05");
  auto game = BuildGame(c);
  EXPECT_EQ(game->Id(), "battleships_3x2_s2x1_p2");
  try {
    GameConfigFromEntries(ParseKeyValues("game = leduc\ncolour = red\n", "cfg"),
                          "cfg");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(ParseKeyValues("width 3\n", "cfg"), ParseError);
}

TEST(ConfigTest, OpponentSpecs) {
  auto bs = MakeBattleships({});
  auto leduc = MakeLeduc();
  EXPECT_EQ(MakeOpponent(*bs, "corner_avoider")->Name(), "corner_avoider");
  EXPECT_EQ(MakeOpponent(*leduc, "s3")->Name(), "s3");
  EXPECT_EQ(MakeOpponent(*leduc, "random:9")->Name(), "random:9");
  EXPECT_THROW(MakeOpponent(*leduc, "corner_avoider"), InvalidArgument);
  EXPECT_THROW(MakeOpponent(*bs, "s1"), InvalidArgument);
  EXPECT_THROW(MakeOpponent(*bs, "bogus"), InvalidArgument);

  std::string path = ::testing::TempDir() + "/opp.strategy";
  TabularPolicy t = Tabulate(*leduc, Player::kP2, *PokerScript(1));
  SaveStrategy(path, t, leduc->Id(), Player::kP2);
  auto loaded = MakeOpponent(*leduc, "file:" + path);
  UniformPolicy u;
  EXPECT_NEAR(ExpectedUtility(*leduc, u, *loaded),
              ExpectedUtility(*leduc, u, *PokerScript(1)), 1e-12);
}

TEST(SmallGamesTest, ThresholdToyStructure) {
  auto toy = MakeThresholdToy();
  EXPECT_TRUE(CheckGame(*toy).empty());
  EXPECT_TRUE(CheckGame(*MakeMatchingPennies()).empty());
  UniformPolicy u;
  EXPECT_NEAR(ExpectedUtility(*MakeMatchingPennies(), u, u), 0.0, 1e-12);
}

}  // namespace
}  // namespace abd
