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
#include <map>

#include "abd/agent/agent.h"
#include "abd/agent/composite.h"
#include "abd/agent/gadget.h"
#include "abd/agent/match.h"
#include "abd/agent/resolver.h"
#include "abd/depthlimit/pure_continuations.h"
#include "abd/efg/strategy_io.h"
#include "abd/efg/traversal.h"
#include "abd/efg/tree.h"
#include "abd/games/battleships.h"
#include "abd/games/poker.h"
#include "abd/games/scripted.h"
#include "abd/robust/rbadapt.h"
#include "abd/solver/cfr.h"
#include "abd/solver/metrics.h"
#include "gtest/gtest.h"

namespace abd {
namespace {

GamePtr TwoByTwo() { return MakeBattleships({}); }

AgentConfig Avoid4Config(const Game& game, double p, int d) {
  AgentConfig config;
  config.p = p;
  config.depth = {d};
  config.p1 = BuiltinPortfolio(game, "avoid4", Player::kP1);
  config.p2 = BuiltinPortfolio(game, "avoid4", Player::kP2);
  config.fixed_opponent = CornerAvoider();
  config.cfr.iterations = 500;
  return config;
}

AgentConfig KuhnConfig(const Game& game) {
  AgentConfig config;
  config.p = 1.0;
  config.depth = {1};
  config.p1 = PureContinuationPortfolio(game, Player::kP1, {1});
  config.p2 = PureContinuationPortfolio(game, Player::kP2, {1});
  config.fixed_opponent = std::make_shared<RandomSeededPolicy>(5);
  config.cfr.iterations = 2000;
  return config;
}

std::vector<std::string> PathOf(const Game& game,
                                const std::vector<int>& actions) {
  auto s = game.NewRoot();
  std::vector<std::string> path{s->PublicKey()};
  for (int a : actions) {
    s->ApplyAction(a);
    path.push_back(s->PublicKey());
  }
  return path;
}

// Reach products of every history consistent with `path`, computed on the
// full tree without pruning along the path.
std::map<std::string, double> OracleWeights(
    const Game& game, const std::vector<std::string>& path,
    const Policy& trunk, const Policy& fixed) {
  std::map<std::string, double> out;
  std::function<void(const State&, int, double)> visit =
      [&](const State& s, int depth, double reach) {
        if (depth + 1 == static_cast<int>(path.size())) {
          if (s.PublicKey() == path.back()) out[s.HistoryKey()] = reach;
          return;
        }
        if (s.IsTerminal()) return;
        std::vector<double> probs =
            s.IsChance() ? s.ChanceProbs()
            : s.Role() == PlayerRole::kP1 ? trunk.ActionProbs(s)
                                          : fixed.ActionProbs(s);
        for (int a = 0; a < s.NumActions(); ++a) {
          visit(*s.Child(a), depth + 1, reach * probs[a]);
        }
      };
  visit(*game.NewRoot(), 0, 1.0);
  double total = 0.0;
  for (const auto& [key, w] : out) total += w;
  for (auto& [key, w] : out) w /= total;
  return out;
}

TEST(GadgetTest, RootWithoutDepthLimitMatchesRbAdapt) {
  auto game = TwoByTwo();
  auto gadget = MakeGadget(game, {}, {0.5, CornerAvoider(), {}});
  for (const auto& v : CheckGame(*gadget)) ADD_FAILURE() << v;
  auto table = std::make_shared<LeafValueTable>(
      BuiltinPortfolio(*game, "avoid4", Player::kP1),
      BuiltinPortfolio(*game, "avoid4", Player::kP2), CornerAvoider(),
      ValueSource{});
  auto dl = MakeDepthLimited(gadget, {{10}, LeafMode::kMatrix}, table);
  CfrConfig config;
  config.iterations = 3000;
  SolveReport a = CfrSolve(*dl, config);
  SolveReport b = CfrSolve(*MakeRbAdapt(game, {0.5, CornerAvoider()}), config);
  EXPECT_EQ(table->size(), 0);
  EXPECT_NEAR(a.value, b.value, a.nash_conv + b.nash_conv + 1e-3);
}

TEST(GadgetTest, FullCommitmentHasNoFreeBranch) {
  auto gadget = MakeGadget(TwoByTwo(), {}, {1.0, CornerAvoider(), {}});
  EXPECT_EQ(gadget->branches().size(), 1u);
  EXPECT_EQ(gadget->NewRoot()->ActionLabel(0), "fixed");
  auto zero = MakeGadget(TwoByTwo(), {}, {0.0, CornerAvoider(), {}});
  EXPECT_EQ(zero->NewRoot()->ActionLabel(0), "free");
}

TEST(GadgetTest, FixedBranchWeightsMatchReachProducts) {
  auto game = TwoByTwo();
  // P1 places, P2 places on cell 3, P1 shoots cell 1 and misses, P2
  // shoots cell 1.
  std::vector<int> actions{0, 3, 1, 1};
  TrunkRecord trunk;
  trunk.path = PathOf(*game, actions);
  Rng rng(17);
  for (const InfosetInfo& info : EnumerateInfosets(*game, Player::kP1)) {
    trunk.p1.Set(info.key, info.labels,
                 SampleSimplex(static_cast<int>(info.labels.size()), rng));
  }
  auto fixed = std::make_shared<RandomSeededPolicy>(3);
  auto gadget = MakeGadget(game, trunk, {0.4, fixed, {}});
  auto oracle = OracleWeights(*game, trunk.path, trunk.p1, *fixed);
  ASSERT_EQ(gadget->fixed_histories().size(), oracle.size());
  double total = 0.0;
  for (size_t i = 0; i < gadget->fixed_histories().size(); ++i) {
    std::string key = gadget->fixed_histories()[i].history->HistoryKey();
    ASSERT_EQ(oracle.count(key), 1u);
    EXPECT_NEAR(gadget->fixed_probs()[i], oracle[key], 1e-12);
    total += gadget->fixed_probs()[i];
  }
  EXPECT_NEAR(total, 1.0, 1e-9);
  double mass = gadget->fixed_mass();
  EXPECT_NEAR(gadget->branch_probs()[0], 0.4 * mass / (0.4 * mass + 0.6),
              1e-12);
  for (const auto& v : CheckGame(*gadget)) ADD_FAILURE() << v;
}

TEST(GadgetTest, ZeroReachFallsBackToUniform) {
  auto game = TwoByTwo();
  TrunkRecord trunk;
  // The corner avoider never opens on cell 0 while other cells are open.
  trunk.path = PathOf(*game, {0, 3, 1, 0});
  auto gadget = MakeGadget(game, trunk, {0.5, CornerAvoider(), {}});
  EXPECT_TRUE(gadget->uniform_fallback());
  size_t n = gadget->fixed_histories().size();
  for (double w : gadget->fixed_probs()) EXPECT_DOUBLE_EQ(w, 1.0 / n);
}

TEST(GadgetTest, OffPathHistoriesAreFlagged) {
  auto game = TwoByTwo();
  TrunkRecord trunk;
  trunk.path = PathOf(*game, {0, 3, 1});
  auto gadget = MakeGadget(game, trunk, {0.0, CornerAvoider(), {}});
  auto s = gadget->NewRoot();
  s->ApplyAction(0);  // Free branch.
  EXPECT_EQ(s->Role(), PlayerRole::kChance);  // P1's trunk placement.
  s->ApplyAction(0);
  s->ApplyAction(3);
  EXPECT_FALSE(s->InSubgame());
  auto off = s->Child(2);  // P1 shoots a cell it did not shoot.
  EXPECT_TRUE(off->OffPath());
  auto on = s->Child(1);
  EXPECT_FALSE(on->OffPath());
  EXPECT_TRUE(on->InSubgame());
}

TEST(ResolverTest, RootPlacementIsTopLeft) {
  auto game = TwoByTwo();
  AgentConfig config = Avoid4Config(*game, 1.0, 1);
  Resolver fast(game, config);
  auto root = game->NewRoot();
  std::vector<std::string> path{root->PublicKey()};
  FastResolveResult r = fast.FastResolve(path, root->InfosetKey(Player::kP1));
  EXPECT_EQ(ArgmaxAction(r.probs), 0);
  EXPECT_DOUBLE_EQ(r.probs[0], 1.0);
  config.fast_path = false;
  Resolver cfr(game, config);
  TrunkRecord trunk;
  trunk.path = path;
  ResolveResult full = cfr.Resolve(trunk);
  EXPECT_GT(full.strategy.ActionProbs(*root)[0], 0.99);
}

TEST(ResolverTest, FastPathIsOneTraversal) {
  auto game = TwoByTwo();
  Resolver resolver(game, Avoid4Config(*game, 1.0, 2));
  auto s = StateFromActions(*game, {0, 1});
  std::vector<std::string> path = PathOf(*game, {0, 1});
  std::string key = s->InfosetKey(Player::kP1);
  FastResolveResult r = resolver.FastResolve(path, key);
  GameTree tree = GameTree::Build(*resolver.BuildFastGame(path, key)->NewRoot());
  EXPECT_GT(r.nodes_visited, 0);
  EXPECT_LE(r.nodes_visited, tree.num_nodes());
}

TEST(ResolverTest, FastPathNeedsFullCommitment) {
  auto game = TwoByTwo();
  Resolver resolver(game, Avoid4Config(*game, 0.5, 1));
  EXPECT_FALSE(resolver.UsesFastPath());
  auto root = game->NewRoot();
  EXPECT_THROW(resolver.FastResolve({root->PublicKey()},
                                    root->InfosetKey(Player::kP1)),
               InvalidArgument);
  AgentConfig bad = Avoid4Config(*game, 1.5, 1);
  EXPECT_THROW(Resolver(game, bad), InvalidArgument);
}

// Plays seeded episodes with both resolvers and compares their argmax at
// every P1 decision.
int CountDisagreements(GamePtr game, const AgentConfig& config, int episodes) {
  AgentConfig slow_config = config;
  slow_config.fast_path = false;
  auto fast = std::make_shared<Resolver>(game, config);
  auto slow = std::make_shared<Resolver>(game, slow_config);
  AbdAgent a(fast);
  AbdAgent b(slow);
  int disagreements = 0;
  for (int e = 0; e < episodes; ++e) {
    Rng rng(DeriveSeed(99, 0, e));
    a.NewEpisode();
    b.NewEpisode();
    auto s = game->NewRoot();
    a.Observe(*s);
    b.Observe(*s);
    while (!s->IsTerminal()) {
      int action;
      if (s->IsChance()) {
        action = SampleIndex(s->ChanceProbs(), rng);
      } else if (s->Role() == PlayerRole::kP1) {
        std::vector<double> pa = a.Act(*s);
        std::vector<double> pb = b.Act(*s);
        if (ArgmaxAction(pa, 1e-6) != ArgmaxAction(pb, 1e-6)) {
          ++disagreements;
        }
        action = SampleIndex(pa, rng);
      } else {
        action = SampleIndex(config.fixed_opponent->ActionProbs(*s), rng);
      }
      s->ApplyAction(action);
      a.Observe(*s);
      b.Observe(*s);
    }
  }
  return disagreements;
}

TEST(ResolverTest, FastPathAgreesWithCfrOnTwoByTwo) {
  auto game = TwoByTwo();
  EXPECT_EQ(CountDisagreements(game, Avoid4Config(*game, 1.0, 1), 100), 0);
}

TEST(ResolverTest, FastPathAgreesWithCfrOnKuhn) {
  auto game = MakeKuhn();
  EXPECT_EQ(CountDisagreements(game, KuhnConfig(*game), 100), 0);
}

TEST(AgentTest, AbdBeatsCornerAvoider) {
  auto game = TwoByTwo();
  auto resolver = std::make_shared<Resolver>(game, Avoid4Config(*game, 1, 1));
  CompositeResult composite = ExtractContinualStrategy(*resolver);
  MatchStats exact = EvaluateExact(*game, composite.strategy, *CornerAvoider());
  EXPECT_NEAR(exact.mean, 1.0, 1e-9);
  EXPECT_NEAR(exact.gain, 0.75, 2e-3);
  MatchStats sim = PlayMatch(
      *game, [&] { return std::make_unique<AbdAgent>(resolver); },
      *CornerAvoider(), 50, 1, 1);
  EXPECT_DOUBLE_EQ(sim.mean, 1.0);
  EXPECT_DOUBLE_EQ(sim.ci95, 0.0);
}

TEST(AgentTest, ActRequiresObservedPublicState) {
  auto game = TwoByTwo();
  AbdAgent agent(std::make_shared<Resolver>(game, Avoid4Config(*game, 1, 1)));
  agent.NewEpisode();
  EXPECT_THROW(agent.Act(*game->NewRoot()), AbdError);
}

TEST(AgentTest, CompositeIsDeterministic) {
  auto game = TwoByTwo();
  AgentConfig config = Avoid4Config(*game, 0.5, 1);
  config.values = {ValueMode::kSampled, 3, 42};
  config.cfr.iterations = 50;
  Resolver a(game, config);
  Resolver b(game, config);
  std::string sa =
      StrategyToString(ExtractContinualStrategy(a).strategy, game->Id(),
                       Player::kP1);
  std::string sb =
      StrategyToString(ExtractContinualStrategy(b).strategy, game->Id(),
                       Player::kP1);
  EXPECT_EQ(sa, sb);
}

TEST(AgentTest, ZeroCommitmentIsSafe) {
  auto game = TwoByTwo();
  AgentConfig config = Avoid4Config(*game, 0.0, 2);
  config.cfr.iterations = 1000;
  Resolver resolver(game, config);
  CompositeResult composite = ExtractContinualStrategy(resolver);
  EXPECT_LE(Exploitability(*game, composite.strategy, Player::kP1), 0.02);
}

TEST(MatchTest, MeanWithCi) {
  MeanCi m = MeanWithCi({1.0, -1.0, 1.0, -1.0});
  EXPECT_DOUBLE_EQ(m.mean, 0.0);
  EXPECT_NEAR(m.ci95, 1.96 * std::sqrt(4.0 / 3.0 / 4.0), 1e-12);
  EXPECT_DOUBLE_EQ(MeanWithCi({2.0}).ci95, 0.0);
}

TEST(MatchTest, SimulationIgnoresWorkerCount) {
  auto game = MakeKuhn();
  auto uniform = std::make_shared<UniformPolicy>();
  PlayerFactory factory = [&] {
    return std::make_unique<PolicyPlayer>(uniform);
  };
  MatchStats one = PlayMatch(*game, factory, *uniform, 400, 5, 1);
  MatchStats many = PlayMatch(*game, factory, *uniform, 400, 5, 3);
  EXPECT_EQ(one.mean, many.mean);
  EXPECT_EQ(one.ci95, many.ci95);
  EXPECT_NEAR(one.mean, 0.0, one.ci95 * 2.0);
}

TEST(MatchTest, EquilibriumSelfPlayGivesTheValue) {
  auto game = MakeKuhn();
  CfrConfig config;
  config.iterations = 4000;
  SolveReport ne = CfrSolve(*game, config);
  MatchStats stats = EvaluateExact(*game, ne.average[0], ne.average[1]);
  EXPECT_NEAR(stats.mean, -1.0 / 18.0, 5e-3);
  EXPECT_NEAR(stats.gain, 0.0, 5e-3);
}

}  // namespace
}  // namespace abd
