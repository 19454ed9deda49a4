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


#ifndef ABD_SOLVER_METRICS_H_
#define ABD_SOLVER_METRICS_H_

#include <string>

#include "abd/efg/game.h"
#include "abd/efg/policy.h"

namespace abd {

inline constexpr double kDefaultValueTolerance = 1e-3;

struct GameValueInfo {
  double value = 0.0;
  double nash_conv = 0.0;
  int iterations = 0;
  bool from_cache = false;
};

// Value of the game for P1: CFR with doubling iteration counts until the
// average profile's NashConv is at most `tol`; the midpoint of the bounds is
// returned. Cached per (game id, tol) for the life of the process.
GameValueInfo SolveGameValue(const Game& game,
                             double tol = kDefaultValueTolerance);
double GameValue(const Game& game, double tol = kDefaultValueTolerance);

// Seeds the cache, for games whose value is known by other means.
void RegisterGameValue(const std::string& game_id, double tol, double value);
void ClearGameValueCache();

// What a best-responding opponent wins against `s` beyond the game value.
double Exploitability(const Game& game, const Policy& s, Player owner,
                      double tol = kDefaultValueTolerance);

// P1's expected utility against `opponent_model` beyond the game value.
double Gain(const Game& game, const Policy& s1, const Policy& opponent_model,
            double tol = kDefaultValueTolerance);

}  // namespace abd

#endif  // ABD_SOLVER_METRICS_H_
