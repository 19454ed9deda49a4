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


#include <cmath>

#include "abd/efg/traversal.h"
#include "abd/efg/tree.h"
#include "abd/games/battleships.h"
#include "abd/games/poker.h"
#include "abd/games/scripted.h"
#include "abd/games/small_games.h"
#include "abd/solver/best_response.h"
#include "abd/solver/cfr.h"
#include "abd/solver/metrics.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace abd {
namespace {

double ProbOf(const TabularPolicy& policy, const State& s, int action) {
  return policy.ActionProbs(s)[action];
}

TEST(CfrTest, MatchingPenniesIsUniform) {
  auto game = MakeMatchingPennies();
  CfrConfig config;
  config.iterations = 1000;
  SolveReport report = CfrSolve(*game, config);
  auto root = game->NewRoot();
  EXPECT_NEAR(ProbOf(report.average[0], *root, 0), 0.5, 0.01);
  auto p2 = root->Child(0);
  EXPECT_NEAR(ProbOf(report.average[1], *p2, 0), 0.5, 0.01);
  EXPECT_EQ(report.iterations, 1000);
}

TEST(CfrTest, KuhnValueAndExploitability) {
  auto game = MakeKuhn();
  CfrConfig config;
  config.iterations = 10000;
  SolveReport report = CfrSolve(*game, config);
  EXPECT_LE(report.nash_conv, 0.005);
  EXPECT_NEAR(report.value, -1.0 / 18.0, 0.005);
  // Cross-check the bounds with the implicit best response.
  double br1 = BestResponse(*game, Player::kP1, report.average[1]).value;
  double br2 = BestResponse(*game, Player::kP2, report.average[0]).value;
  EXPECT_NEAR(br1, report.value_upper, 1e-9);
  EXPECT_NEAR(-br2, report.value_lower, 1e-9);
  EXPECT_GE(report.exploitability_p1, -1e-6);
  EXPECT_GE(report.exploitability_p2, -1e-6);
}

TEST(CfrTest, VariantsConverge) {
  auto game = MakeKuhn();
  for (CfrVariant variant : {CfrVariant::kVanilla, CfrVariant::kPlus}) {
    for (CfrAveraging avg : {CfrAveraging::kUniform, CfrAveraging::kLinear}) {
      for (bool alternating : {false, true}) {
        CfrConfig config;
        config.iterations = 3000;
        config.variant = variant;
        config.averaging = avg;
        config.alternating_updates = alternating;
        EXPECT_LE(CfrSolve(*game, config).nash_conv, 0.05);
      }
    }
  }
}

TEST(CfrTest, TwoByTwoBattleshipsValue) {
  auto game = MakeBattleships({});
  CfrConfig config;
  config.iterations = 2000;
  SolveReport report = CfrSolve(*game, config);
  EXPECT_NEAR(report.value, 0.25, 0.005);
  EXPECT_LE(report.nash_conv, 0.01);
}

TEST(CfrTest, ExploitabilityShrinksWithIterations) {
  auto game = MakeKuhn();
  GameTree tree = GameTree::Build(*game->NewRoot());
  CfrSolver solver(tree, CfrConfig{});
  double previous = 1e9;
  for (int target : {100, 1000, 10000}) {
    solver.Iterate(target - solver.iterations());
    double nc = EvaluateProfile(tree, solver.AverageStrategy(Player::kP1),
                                solver.AverageStrategy(Player::kP2))
                    .nash_conv();
    EXPECT_LE(nc, previous + 1e-3);
    previous = nc;
  }
}

TEST(CfrTest, RejectsZeroIterations) {
  CfrConfig config;
  config.iterations = 0;
  EXPECT_THROW(CfrSolve(*MakeKuhn(), config), InvalidArgument);
}

TEST(BestResponseTest, CornerAvoiderIsBeaten) {
  auto game = MakeBattleships({});
  BestResponseResult br = BestResponse(*game, Player::kP1, *CornerAvoider());
  EXPECT_NEAR(br.value, 1.0, 1e-12);
  // The response places on the top-left cell.
  EXPECT_EQ(br.policy.ActionProbs(*game->NewRoot())[0], 1.0);
}

TEST(BestResponseTest, MatchesPureEnumerationOnKuhn) {
  auto game = MakeKuhn();
  UniformPolicy u;
  for (Player responder : {Player::kP1, Player::kP2}) {
    int64_t count = 0;
    double oracle = testing_oracles::PureEnumerationBestResponse(
        *game, responder, u, &count);
    EXPECT_EQ(count, 64);
    BestResponseResult br = BestResponse(*game, responder, u);
    EXPECT_NEAR(br.value, oracle, 1e-9);
    // The returned pure strategy attains the value.
    double eu = responder == Player::kP1 ? ExpectedUtility(*game, br.policy, u)
                                         : -ExpectedUtility(*game, u, br.policy);
    EXPECT_NEAR(eu, br.value, 1e-9);
  }
}

TEST(BestResponseTest, MatchesPureEnumerationOnRandomOpponents) {
  auto game = MakeKuhn();
  for (uint64_t seed : {1, 2, 3}) {
    RandomSeededPolicy opp(seed);
    double oracle =
        testing_oracles::PureEnumerationBestResponse(*game, Player::kP1, opp);
    EXPECT_NEAR(BestResponse(*game, Player::kP1, opp).value, oracle, 1e-9);
  }
}

TEST(BestResponseTest, TreeAndImplicitAgree) {
  auto game = MakeLeduc();
  GameTree tree = GameTree::Build(*game->NewRoot());
  for (int i = 1; i <= 4; ++i) {
    auto script = PokerScript(i);
    TabularPolicy table = Tabulate(*game, Player::kP2, *script);
    double tree_value = ComputeTreeBestResponse(
                            tree, Player::kP1,
                            tree.StrategyFrom(Player::kP2, table))
                            .value;
    EXPECT_NEAR(BestResponse(*game, Player::kP1, *script).value, tree_value,
                1e-9);
  }
}

TEST(BestResponseTest, TieGoesToLowestIndex) {
  auto game = MakeMatchingPennies();
  UniformPolicy u;
  BestResponseResult br = BestResponse(*game, Player::kP1, u);
  EXPECT_EQ(br.policy.ActionProbs(*game->NewRoot()),
            (std::vector<double>{1.0, 0.0}));
}

TEST(BestResponseTest, NodeCap) {
  UniformPolicy u;
  EXPECT_THROW(BestResponse(*MakeLeduc(), Player::kP1, u, 10),
               NodeCapExceeded);
}

TEST(MetricsTest, GameValuesAndGain) {
  auto bs = MakeBattleships({});
  EXPECT_NEAR(GameValue(*bs), 0.25, 0.005);
  BestResponseResult br = BestResponse(*bs, Player::kP1, *CornerAvoider());
  EXPECT_NEAR(Gain(*bs, br.policy, *CornerAvoider()), 0.75, 0.005);
  // Best response maximizes gain among tested strategies.
  UniformPolicy u;
  EXPECT_GE(Gain(*bs, br.policy, *CornerAvoider()) + 1e-12,
            Gain(*bs, u, *CornerAvoider()));
  EXPECT_GE(Gain(*bs, br.policy, *CornerAvoider()) + 1e-12,
            Gain(*bs, *TopLeftPlacer(), *CornerAvoider()));
}

TEST(MetricsTest, KuhnValueMatchesClosedForm) {
  auto kuhn = MakeKuhn();
  GameValueInfo info = SolveGameValue(*kuhn);
  EXPECT_LE(info.nash_conv, 1e-3);
  EXPECT_NEAR(info.value, -1.0 / 18.0, 1e-3);
  EXPECT_TRUE(SolveGameValue(*kuhn).from_cache);
}

TEST(MetricsTest, EquilibriumHasSmallExploitabilityAndZeroGain) {
  auto kuhn = MakeKuhn();
  CfrConfig config;
  config.iterations = 20000;
  SolveReport report = CfrSolve(*kuhn, config);
  EXPECT_LE(Exploitability(*kuhn, report.average[0], Player::kP1), 0.01);
  EXPECT_LE(Exploitability(*kuhn, report.average[1], Player::kP2), 0.01);
  EXPECT_NEAR(Gain(*kuhn, report.average[0], report.average[1]), 0.0, 0.01);
  BestResponseResult vs_ne =
      BestResponse(*kuhn, Player::kP1, report.average[1]);
  EXPECT_NEAR(vs_ne.value, GameValue(*kuhn), 0.01);
}

TEST(MetricsTest, TopLeftUniformShooterExploitability) {
  auto bs = MakeBattleships({});
  TabularPolicy s = UniformStrategy(*bs, Player::kP1);
  s.SetAt(*bs->NewRoot(), {1.0, 0.0, 0.0, 0.0});
  double e = Exploitability(*bs, s, Player::kP1);
  // Materialized-tree best response as the cross-check.
  GameTree tree = GameTree::Build(*bs->NewRoot());
  double oracle = ComputeTreeBestResponse(tree, Player::kP2,
                                          tree.StrategyFrom(Player::kP1, s))
                      .value +
                  GameValue(*bs);
  EXPECT_NEAR(e, oracle, 1e-9);
  EXPECT_GE(e, 0.0);
  EXPECT_NEAR(e - GameValue(*bs), testing_oracles::kTopLeftUniformBrP2, 1e-9);
}

TEST(MetricsTest, LeducValueAndUniformExploitability) {
  auto leduc = MakeLeduc();
  GameValueInfo info = SolveGameValue(*leduc);
  EXPECT_LE(info.nash_conv, 1e-3);
  UniformPolicy u;
  double e_u = Exploitability(*leduc, u, Player::kP1);
  EXPECT_GT(e_u, 0.0);
  EXPECT_NEAR(info.value, testing_oracles::kLeducValue, 1e-3);
  EXPECT_NEAR(e_u, testing_oracles::kLeducUniformExploitability, 1e-3);
  double br2 = BestResponse(*leduc, Player::kP2, u).value;
  GameTree tree = GameTree::Build(*leduc->NewRoot());
  EXPECT_NEAR(br2,
              ComputeTreeBestResponse(tree, Player::kP2,
                                      tree.UniformStrategy(Player::kP1))
                  .value,
              1e-9);
}

TEST(MetricsTest, TightPassiveGainAgainstS1) {
  auto leduc = MakeLeduc();
  Portfolio p = BuiltinPortfolio(*leduc, "leduc2", Player::kP1);
  // Tight-passive P1 against S1 (passive, then aggressive in round 2).
  double eu = testing_oracles::LeducValue(
      [](int player, int round, const std::string&, int, int,
         const std::string& legal) {
        bool aggressive = player == 1 && round == 2;
        return testing_oracles::LeducScriptedChoice(legal, aggressive, false);
      });
  double g = Gain(*leduc, p.at(0), *PokerScript(1));
  EXPECT_EQ(eu, -1.0);
  EXPECT_NEAR(g, eu - GameValue(*leduc), 1e-12);
}

}  // namespace
}  // namespace abd
