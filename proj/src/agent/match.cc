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


#include "abd/agent/match.h"

#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>

#include "abd/efg/parallel.h"
#include "abd/efg/traversal.h"
#include "abd/solver/metrics.h"

namespace abd {

namespace {

// Games too large to solve report no value (and no gain).
double GameValueOrNan(const Game& game) {
  try {
    return GameValue(game);
  } catch (const NodeCapExceeded&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

}  // namespace

MeanCi MeanWithCi(const std::vector<double>& values) {
  MeanCi out;
  if (values.empty()) return out;
  double n = static_cast<double>(values.size());
  for (double v : values) out.mean += v;
  out.mean /= n;
  if (values.size() < 2) return out;
  double ss = 0.0;
  for (double v : values) ss += (v - out.mean) * (v - out.mean);
  out.ci95 = 1.96 * std::sqrt(ss / (n - 1.0) / n);
  return out;
}

double PlayEpisode(const Game& game, EpisodePlayer& player,
                   const Policy& opponent, Rng& rng) {
  player.NewEpisode();
  std::unique_ptr<State> s = game.NewRoot();
  player.Observe(*s);
  while (!s->IsTerminal()) {
    int action;
    if (s->IsChance()) {
      action = SampleIndex(s->ChanceProbs(), rng);
    } else if (s->Role() == PlayerRole::kP1) {
      action = SampleIndex(player.Act(*s), rng);
    } else {
      action = SampleIndex(opponent.ActionProbs(*s), rng);
    }
    s->ApplyAction(action);
    player.Observe(*s);
  }
  return s->UtilityP1();
}

MatchStats PlayMatch(const Game& game, const PlayerFactory& factory,
                     const Policy& opponent, int episodes, uint64_t seed,
                     int threads) {
  if (episodes < 1) throw InvalidArgument("episodes must be at least 1");
  auto start = std::chrono::steady_clock::now();
  std::vector<double> utility(episodes);
  std::string name;
  std::mutex mu;
  ParallelFor(
      episodes,
      [&](int64_t e) {
        std::unique_ptr<EpisodePlayer> player = factory();
        Rng rng(DeriveSeed(seed, 0, static_cast<uint64_t>(e)));
        utility[e] = PlayEpisode(game, *player, opponent, rng);
        if (e == 0) {
          std::lock_guard<std::mutex> lock(mu);
          name = player->Name();
        }
      },
      threads);
  MeanCi m = MeanWithCi(utility);
  MatchStats stats;
  stats.player = name;
  stats.opponent = opponent.Name();
  stats.episodes = episodes;
  stats.mean = m.mean;
  stats.ci95 = m.ci95;
  stats.game_value = GameValueOrNan(game);
  stats.gain = stats.mean - stats.game_value;
  stats.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return stats;
}

MatchStats EvaluateExact(const Game& game, const Policy& p1,
                         const Policy& opponent) {
  auto start = std::chrono::steady_clock::now();
  MatchStats stats;
  stats.player = p1.Name();
  stats.opponent = opponent.Name();
  stats.mean = ExpectedUtility(game, p1, opponent);
  stats.game_value = GameValueOrNan(game);
  stats.gain = stats.mean - stats.game_value;
  stats.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return stats;
}

}  // namespace abd
