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


#ifndef ABD_AGENT_MATCH_H_
#define ABD_AGENT_MATCH_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "abd/agent/agent.h"
#include "abd/efg/game.h"
#include "abd/efg/policy.h"
#include "abd/efg/random.h"

namespace abd {

struct MatchStats {
  std::string player;
  std::string opponent;
  int episodes = 0;  // 0 in exact mode.
  double mean = 0.0;  // P1 utility.
  double ci95 = 0.0;  // Half-width of the normal-approximation interval.
  double game_value = 0.0;  // NaN when the game is too large to solve.
  double gain = 0.0;  // mean - game_value.
  double seconds = 0.0;
};

// Mean and 95% normal-approximation half-width of a sample.
struct MeanCi {
  double mean = 0.0;
  double ci95 = 0.0;
};
MeanCi MeanWithCi(const std::vector<double>& values);

using PlayerFactory = std::function<std::unique_ptr<EpisodePlayer>()>;

// Plays one episode; chance and the opponent are sampled from `rng`.
double PlayEpisode(const Game& game, EpisodePlayer& player,
                   const Policy& opponent, Rng& rng);

// Simulated episodes. Episode e draws from DeriveSeed(seed, 0, e), so
// results do not depend on the worker count. Each worker builds its own
// player through `factory`.
MatchStats PlayMatch(const Game& game, const PlayerFactory& factory,
                     const Policy& opponent, int episodes, uint64_t seed,
                     int threads = 0);

// Exact expectation of a behavioral P1 strategy (for an agent, the
// composite from ExtractContinualStrategy).
MatchStats EvaluateExact(const Game& game, const Policy& p1,
                         const Policy& opponent);

}  // namespace abd

#endif  // ABD_AGENT_MATCH_H_
