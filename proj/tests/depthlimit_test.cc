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
#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "abd/depthlimit/depth_limited_game.h"
#include "abd/depthlimit/leaf_values.h"
#include "abd/depthlimit/mixture.h"
#include "abd/depthlimit/pure_continuations.h"
#include "abd/efg/traversal.h"
#include "abd/efg/tree.h"
#include "abd/games/battleships.h"
#include "abd/games/poker.h"
#include "abd/games/scripted.h"
#include "abd/robust/rbadapt.h"
#include "abd/solver/best_response.h"
#include "abd/solver/cfr.h"
#include "abd/solver/metrics.h"
#include "gtest/gtest.h"

namespace abd {
namespace {

// Independent recursive evaluator used as the oracle for leaf entries.
double Brute(const State& s, const Policy& pi1, const Policy& pi2) {
  if (s.IsTerminal()) return s.UtilityP1();
  std::vector<double> probs;
  if (s.IsChance()) {
    probs = s.ChanceProbs();
  } else if (s.Role() == PlayerRole::kP1) {
    probs = pi1.ActionProbs(s);
  } else {
    probs = pi2.ActionProbs(s);
  }
  double total = 0.0;
  for (int a = 0; a < s.NumActions(); ++a) {
    if (probs[a] == 0.0) continue;
    total += probs[a] * Brute(*s.Child(a), pi1, pi2);
  }
  return total;
}

GamePtr TwoByTwo() { return MakeBattleships({}); }

std::shared_ptr<LeafValueTable> Avoid4Table(const Game& game) {
  return std::make_shared<LeafValueTable>(
      BuiltinPortfolio(game, "avoid4", Player::kP1),
      BuiltinPortfolio(game, "avoid4", Player::kP2), CornerAvoider(),
      ValueSource{});
}

TEST(LeafValuesTest, ExactEntriesMatchBruteForce) {
  auto game = TwoByTwo();
  auto table = Avoid4Table(*game);
  auto root = game->NewRoot();
  auto frontier = FrontierHistories(*root, {1});
  ASSERT_FALSE(frontier.empty());
  for (const auto& h : frontier) {
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        EXPECT_NEAR(table->Value(*h, i, j),
                    Brute(*h, table->p1().at(i), table->p2().at(j)), 1e-12);
      }
      EXPECT_NEAR(table->Value(*h, i, LeafValueTable::kFixedColumn),
                  Brute(*h, table->p1().at(i), *CornerAvoider()), 1e-12);
    }
  }
  EXPECT_EQ(table->rollouts(), 0);
}

TEST(LeafValuesTest, SampledMeanIsUnbiased) {
  auto kuhn = MakeKuhn();
  auto root = kuhn->NewRoot();
  UniformPolicy uniform;
  double exact = ExactValue(*root, uniform, uniform);
  EXPECT_NEAR(exact, Brute(*root, uniform, uniform), 1e-12);
  const int reps = 1000;
  const int samples = 100;
  const double width = kuhn->MaxUtility() - kuhn->MinUtility();
  const double eps = width * std::sqrt(std::log(2.0 / 0.01) / (2.0 * samples));
  int inside = 0;
  double sum = 0.0;
  for (int r = 0; r < reps; ++r) {
    double v = SampledValue(*root, uniform, uniform, samples, 7, r);
    sum += v;
    if (std::abs(v - exact) <= eps) ++inside;
  }
  EXPECT_GE(inside, 0.99 * reps);
  double total_eps =
      width * std::sqrt(std::log(2.0 / 0.01) / (2.0 * samples * reps));
  EXPECT_LE(std::abs(sum / reps - exact), total_eps);
}

TEST(LeafValuesTest, SampledValuesIgnoreQueryOrder) {
  auto game = TwoByTwo();
  ValueSource source{ValueMode::kSampled, 5, 11};
  auto make = [&] {
    return LeafValueTable(BuiltinPortfolio(*game, "avoid4", Player::kP1),
                          BuiltinPortfolio(*game, "avoid4", Player::kP2),
                          CornerAvoider(), source, /*rational_node_cap=*/0);
  };
  LeafValueTable a = make();
  LeafValueTable b = make();
  auto frontier = FrontierHistories(*game->NewRoot(), {1});
  std::vector<double> forward;
  for (const auto& h : frontier) {
    for (int i = 0; i < 4; ++i) forward.push_back(a.Value(*h, i, -1));
  }
  std::vector<double> backward;
  for (auto it = frontier.rbegin(); it != frontier.rend(); ++it) {
    for (int i = 3; i >= 0; --i) backward.push_back(b.Value(**it, i, -1));
  }
  std::reverse(backward.begin(), backward.end());
  EXPECT_EQ(forward, backward);
  EXPECT_GT(a.rollouts(), 0);
  std::ostringstream dump;
  a.Dump(dump);
  EXPECT_EQ(dump.str().substr(0, dump.str().find('\n')),
            "history_key,provenance,p1_name,p2_name,value");
}

TEST(LeafValuesTest, RejectsBadSource) {
  EXPECT_THROW(ValidateValueSource({ValueMode::kSampled, 0, 0}),
               InvalidArgument);
  EXPECT_THROW(ParseValueMode("guess"), InvalidArgument);
  EXPECT_EQ(ParseValueMode("sampled"), ValueMode::kSampled);
}

TEST(DepthLimitedGameTest, TwoByTwoLeavesAreFourByFour) {
  auto game = TwoByTwo();
  auto dl = MakeDepthLimited(game, {{1}, LeafMode::kMatrix}, Avoid4Table(*game));
  for (const auto& v : CheckGame(*dl)) ADD_FAILURE() << v;
  int p1_picks = 0;
  int p2_picks = 0;
  ForEachHistory(*dl->NewRoot(), [&](const State& s) {
    const auto& d = dynamic_cast<const DepthLimitedState&>(s);
    if (d.phase() == DepthLimitedState::Phase::kP1Pick) {
      ++p1_picks;
      EXPECT_EQ(s.NumActions(), 4);
      EXPECT_EQ(d.opponent_moves(), 1);
    } else if (d.phase() == DepthLimitedState::Phase::kP2Pick) {
      ++p2_picks;
      EXPECT_EQ(s.NumActions(), 4);
    }
    return true;
  });
  EXPECT_EQ(p1_picks, static_cast<int>(
                          FrontierHistories(*game->NewRoot(), {1}).size()));
  EXPECT_EQ(p2_picks, 4 * p1_picks);
}

TEST(DepthLimitedGameTest, FrontierAtDepthZeroIsTheRoot) {
  auto game = TwoByTwo();
  auto frontier = FrontierHistories(*game->NewRoot(), {0});
  ASSERT_EQ(frontier.size(), 1u);
  EXPECT_EQ(frontier[0]->HistoryKey(), game->NewRoot()->HistoryKey());
}

TEST(DepthLimitedGameTest, RejectsBadOptions) {
  auto game = TwoByTwo();
  EXPECT_THROW(MakeDepthLimited(game, {{-1}, LeafMode::kMatrix},
                                Avoid4Table(*game)),
               InvalidArgument);
  EXPECT_THROW(MakeDepthLimited(game, {{1}, LeafMode::kMatrix}, nullptr),
               InvalidArgument);
}

TEST(DepthLimitedGameTest, FixedColumnOnlyInFreeBranch) {
  auto game = TwoByTwo();
  auto robust = MakeRbAdapt(game, {0.5, CornerAvoider()});
  DepthLimitOptions options{{1}, LeafMode::kMatrix, true};
  auto dl = MakeDepthLimited(robust, options, Avoid4Table(*game));
  for (const auto& v : CheckGame(*dl)) ADD_FAILURE() << v;
  ForEachHistory(*dl->NewRoot(), [&](const State& s) {
    const auto& d = dynamic_cast<const DepthLimitedState&>(s);
    if (d.phase() == DepthLimitedState::Phase::kP2Pick) {
      EXPECT_FALSE(d.FixedOpponent());
      EXPECT_EQ(s.NumActions(), 5);
      EXPECT_EQ(s.ActionLabel(4), "fixed");
    }
    if (d.phase() == DepthLimitedState::Phase::kLeafDone) {
      EXPECT_EQ(d.FixedLeaf(), d.FixedOpponent());
    }
    return true;
  });
}

TEST(PureContinuationsTest, KuhnFullPortfoliosRecoverTheGameValue) {
  auto kuhn = MakeKuhn();
  DepthSpec depth{1};
  Portfolio p1 = PureContinuationPortfolio(*kuhn, Player::kP1, depth);
  Portfolio p2 = PureContinuationPortfolio(*kuhn, Player::kP2, depth);
  ASSERT_GT(p1.size(), 1);
  auto table = std::make_shared<LeafValueTable>(p1, p2, nullptr, ValueSource{});
  auto dl = MakeDepthLimited(kuhn, {depth, LeafMode::kMatrix}, table);
  CfrConfig config;
  config.iterations = 4000;
  SolveReport report = CfrSolve(*dl, config);
  EXPECT_NEAR(report.value, -1.0 / 18.0, report.nash_conv + 1e-3);
  EXPECT_LT(report.nash_conv, 5e-3);
  TabularPolicy composed = ComposeWithPortfolio(
      *kuhn, Player::kP1, depth, report.average[0], p1);
  double expl = Exploitability(*kuhn, composed, Player::kP1);
  EXPECT_LE(expl, report.nash_conv + 1e-6);
}

TEST(PureContinuationsTest, PlansAreReducedAndDistinct) {
  auto kuhn = MakeKuhn();
  auto root = kuhn->NewRoot();
  PlanSet set = EnumeratePurePlans({root.get()}, Player::kP1);
  // Per card: bet, check-fold or check-call.
  EXPECT_EQ(set.plans.size(), 27u);
  std::set<PurePlan> unique(set.plans.begin(), set.plans.end());
  EXPECT_EQ(unique.size(), set.plans.size());
  EXPECT_THROW(EnumeratePurePlans({root.get()}, Player::kP1, 10),
               NodeCapExceeded);
}

TEST(RationalLeavesTest, KuhnEndpoints) {
  auto kuhn = MakeKuhn();
  auto uniform = std::make_shared<UniformPolicy>();
  auto robust = MakeRbAdapt(kuhn, {1.0, uniform});
  CfrConfig config;
  config.iterations = 4000;
  auto none = MakeDepthLimited(robust, {{0}, LeafMode::kRational}, nullptr);
  SolveReport r0 = CfrSolve(*none, config);
  EXPECT_NEAR(r0.value, -1.0 / 18.0, r0.nash_conv + 1e-3);
  auto all = MakeDepthLimited(robust, {{10}, LeafMode::kRational}, nullptr);
  SolveReport r10 = CfrSolve(*all, config);
  double br = BestResponse(*kuhn, Player::kP1, *uniform).value;
  EXPECT_NEAR(r10.value, br, r10.nash_conv + 1e-3);
  EXPECT_GT(br, -1.0 / 18.0);
}

}  // namespace
}  // namespace abd
