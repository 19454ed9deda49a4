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


#include "abd/solver/metrics.h"

#include <map>
#include <mutex>
#include <utility>

#include "abd/efg/traversal.h"
#include "abd/efg/tree.h"
#include "abd/solver/best_response.h"
#include "abd/solver/cfr.h"

namespace abd {
namespace {

std::mutex& CacheMutex() {
  static std::mutex mu;
  return mu;
}

std::map<std::pair<std::string, double>, GameValueInfo>& Cache() {
  static auto* cache = new std::map<std::pair<std::string, double>, GameValueInfo>();
  return *cache;
}

constexpr int kInitialIterations = 256;
constexpr int kMaxIterations = 1 << 20;

}  // namespace

GameValueInfo SolveGameValue(const Game& game, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("value tolerance must be positive");
  auto key = std::make_pair(game.Id(), tol);
  {
    std::lock_guard<std::mutex> lock(CacheMutex());
    auto it = Cache().find(key);
    if (it != Cache().end()) {
      GameValueInfo info = it->second;
      info.from_cache = true;
      return info;
    }
  }
  GameTree tree = GameTree::Build(*game.NewRoot());
  CfrSolver solver(tree, CfrConfig{});
  int target = kInitialIterations;
  GameValueInfo info;
  while (true) {
    solver.Iterate(target - solver.iterations());
    ProfileBounds b =
        EvaluateProfile(tree, solver.AverageStrategy(Player::kP1),
                        solver.AverageStrategy(Player::kP2));
    info.value = 0.5 * (b.value_lower + b.value_upper);
    info.nash_conv = b.nash_conv();
    info.iterations = solver.iterations();
    if (info.nash_conv <= tol) break;
    if (target >= kMaxIterations) {
      throw AbdError("game value of '" + game.Id() + "' did not reach NashConv " +
                     std::to_string(tol) + " within " +
                     std::to_string(kMaxIterations) + " iterations");
    }
    target *= 2;
  }
  std::lock_guard<std::mutex> lock(CacheMutex());
  Cache().emplace(key, info);
  return info;
}

double GameValue(const Game& game, double tol) {
  return SolveGameValue(game, tol).value;
}

void RegisterGameValue(const std::string& game_id, double tol, double value) {
  std::lock_guard<std::mutex> lock(CacheMutex());
  GameValueInfo info;
  info.value = value;
  Cache()[std::make_pair(game_id, tol)] = info;
}

void ClearGameValueCache() {
  std::lock_guard<std::mutex> lock(CacheMutex());
  Cache().clear();
}

double Exploitability(const Game& game, const Policy& s, Player owner,
                      double tol) {
  double v = GameValue(game, tol);
  Player opp = Opponent(owner);
  double br = BestResponse(game, opp, s).value;
  // The opponent's equilibrium payoff is -v for P2 and v for P1.
  return br - UtilityFor(opp, v);
}

double Gain(const Game& game, const Policy& s1, const Policy& opponent_model,
            double tol) {
  return ExpectedUtility(game, s1, opponent_model) - GameValue(game, tol);
}

}  // namespace abd
