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


#include <algorithm>

#include "abd/efg/traversal.h"
#include "abd/efg/tree.h"
#include "abd/games/battleships.h"
#include "abd/games/poker.h"
#include "abd/games/scripted.h"
#include "abd/games/small_games.h"
#include "abd/robust/rbadapt.h"
#include "abd/robust/rnr.h"
#include "abd/solver/best_response.h"
#include "abd/solver/metrics.h"
#include "gtest/gtest.h"

namespace abd {
namespace {

CfrConfig Iterations(int n) {
  CfrConfig config;
  config.iterations = n;
  return config;
}

GamePtr TwoByTwo() { return MakeBattleships({}); }

TEST(RbAdaptTest, StructureAndMerging) {
  auto base = TwoByTwo();
  auto robust = MakeRbAdapt(base, {0.5, CornerAvoider()});
  EXPECT_TRUE(CheckGame(*robust).empty());
  GameTree g = GameTree::Build(*base->NewRoot());
  GameTree r = GameTree::Build(*robust->NewRoot());
  EXPECT_EQ(r.num_infosets(Player::kP1), g.num_infosets(Player::kP1));
  EXPECT_EQ(r.num_infosets(Player::kP2), g.num_infosets(Player::kP2));
  auto root = robust->NewRoot();
  EXPECT_EQ(root->ChanceProbs(), (std::vector<double>{0.5, 0.5}));
  auto fixed = root->Child(0);
  fixed->ApplyAction(0);  // P1 places; P2 is now a chance node.
  EXPECT_EQ(fixed->Role(), PlayerRole::kChance);
  EXPECT_EQ(fixed->Mover(), Player::kP2);
  EXPECT_TRUE(fixed->FixedOpponent());
  auto free = root->Child(1);
  free->ApplyAction(0);
  EXPECT_EQ(free->Role(), PlayerRole::kP2);
  EXPECT_EQ(free->InfosetKey(Player::kP1), fixed->InfosetKey(Player::kP1));
  EXPECT_NE(free->InfosetKey(Player::kP2), fixed->InfosetKey(Player::kP2));
  EXPECT_THROW(MakeRbAdapt(base, {1.5, CornerAvoider()}), InvalidArgument);
}

TEST(RbAdaptTest, EndpointsPruneBranches) {
  auto base = TwoByTwo();
  GameTree g = GameTree::Build(*base->NewRoot());
  GameTree r0 = GameTree::Build(*MakeRbAdapt(base, {0.0, CornerAvoider()})->NewRoot());
  // Root chance plus an identical copy.
  EXPECT_EQ(r0.num_nodes(), g.num_nodes() + 1);
}

TEST(RnrTest, EndpointsOnBattleships) {
  auto base = TwoByTwo();
  RnrResult ne = RestrictedNashResponse(base, {0.0, CornerAvoider()},
                                        Iterations(2000));
  EXPECT_NEAR(ne.report.value, GameValue(*base), 0.005);
  EXPECT_LE(ne.exploitability, 0.01);
  RnrResult br = RestrictedNashResponse(base, {1.0, CornerAvoider()},
                                        Iterations(2000));
  EXPECT_NEAR(br.gain, 0.75, 0.01);
  double best = BestResponse(*base, Player::kP1, *CornerAvoider()).value;
  EXPECT_NEAR(br.gain, best - GameValue(*base), 0.01);
}

TEST(RnrTest, HalfPointMatchesLongerRun) {
  auto base = TwoByTwo();
  RnrResult a = RestrictedNashResponse(base, {0.5, CornerAvoider()},
                                       Iterations(1000));
  RnrResult b = RestrictedNashResponse(base, {0.5, CornerAvoider()},
                                       Iterations(10000));
  // At p = 0.5 the 2x2 responses form a segment on which gain and
  // exploitability move together; the robust objective is what is unique.
  auto objective = [](const RnrResult& r) {
    return r.p * r.gain - (1.0 - r.p) * r.exploitability;
  };
  EXPECT_NEAR(objective(a), objective(b), 0.01);
  // Away from the tie both coordinates settle.
  RnrResult c = RestrictedNashResponse(base, {0.3, CornerAvoider()},
                                       Iterations(1000));
  RnrResult d = RestrictedNashResponse(base, {0.3, CornerAvoider()},
                                       Iterations(10000));
  EXPECT_NEAR(c.gain, d.gain, 0.01);
  EXPECT_NEAR(c.exploitability, d.exploitability, 0.01);
}

TEST(RnrTest, RestrictedEquilibriumFixedPoint) {
  auto base = TwoByTwo();
  RobustSpec spec{0.5, CornerAvoider()};
  RnrResult r = RestrictedNashResponse(base, spec, Iterations(2000));
  auto robust = MakeRbAdapt(base, spec);
  double ev = ExpectedUtility(*robust, r.report.average[0],
                              r.report.average[1]);
  double eps = 2.0 * r.report.nash_conv + 1e-9;
  // P2's free-copy strategy answers the response almost optimally.
  double p2_br = BestResponse(*robust, Player::kP2, r.report.average[0]).value;
  EXPECT_LE(p2_br - (-ev), eps);
  // The response answers the p-mixture almost optimally.
  double p1_br = BestResponse(*robust, Player::kP1, r.report.average[1]).value;
  EXPECT_LE(p1_br - ev, eps);
}

TEST(RnrTest, LeducNashAgainstS1) {
  auto leduc = MakeLeduc();
  RnrResult r = RestrictedNashResponse(leduc, {0.0, PokerScript(1)},
                                       Iterations(2000));
  EXPECT_LE(r.exploitability, 0.02);
  SolveReport ne = CfrSolve(*leduc, Iterations(2000));
  EXPECT_NEAR(r.gain, Gain(*leduc, ne.average[0], *PokerScript(1)), 0.05);
}

TEST(RnrTest, SweepIsMonotone) {
  auto base = TwoByTwo();
  auto rows = ParetoSweep(base, CornerAvoider(), {1.0, 0.0, 0.5, 0.25, 0.75},
                          Iterations(3000));
  ASSERT_EQ(rows.size(), 5u);
  for (size_t i = 1; i < rows.size(); ++i) {
    EXPECT_LT(rows[i - 1].p, rows[i].p);
    EXPECT_GE(rows[i].gain, rows[i - 1].gain - 0.01);
    EXPECT_GE(rows[i].exploitability, rows[i - 1].exploitability - 0.01);
  }
  EXPECT_EQ(DefaultPGrid().size(), 11u);
  auto single = ParetoSweep(base, CornerAvoider(), {0.0}, Iterations(1000));
  ASSERT_EQ(single.size(), 1u);
  EXPECT_LE(single[0].exploitability, 0.02);
}

// Argmax of P1's root choice in the robust game, by action values against
// the solved P2 strategy.
int RootChoice(const GamePtr& toy, double p, std::vector<double>* values) {
  RobustSpec spec{p, ThresholdToyBlunderer()};
  RnrResult r = RestrictedNashResponse(toy, spec, Iterations(5000));
  auto robust = MakeRbAdapt(toy, spec);
  BestResponseResult br =
      BestResponse(*robust, Player::kP1, r.report.average[1]);
  *values = br.action_values.at(toy->NewRoot()->InfosetKey(Player::kP1));
  auto probs = r.response.ActionProbs(*toy->NewRoot());
  return static_cast<int>(std::max_element(probs.begin(), probs.end()) -
                          probs.begin());
}

TEST(RnrTest, ThresholdToyBehavior) {
  auto toy = MakeThresholdToy(true);
  std::vector<double> q;
  for (double p : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    EXPECT_EQ(RootChoice(toy, p, &q), 1) << "p=" << p;  // ADPT
    EXPECT_GT(q[1], q[0]);
    EXPECT_GT(q[1], q[2]);
  }
  RootChoice(toy, 1.0, &q);
  EXPECT_NEAR(q[1], q[2], 1e-9);
  EXPECT_GT(q[1], q[0]);

  auto opt_risk = MakeThresholdToy(false);
  for (double p : {0.1, 0.3, 0.45}) {
    EXPECT_EQ(RootChoice(opt_risk, p, &q), 0) << "p=" << p;  // OPT
  }
  for (double p : {0.55, 0.7, 0.9}) {
    EXPECT_EQ(RootChoice(opt_risk, p, &q), 1) << "p=" << p;  // RISK
  }
}

}  // namespace
}  // namespace abd
