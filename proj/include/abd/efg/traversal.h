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

#ifndef ABD_EFG_TRAVERSAL_H_
#define ABD_EFG_TRAVERSAL_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "abd/efg/game.h"
#include "abd/efg/policy.h"

namespace abd {

// Exact expected P1 utility of (s1, s2) below `state`, by full recursion.
// Subtrees reached with probability zero are skipped, so strategies only
// need to cover infosets reachable under the profile.
double ExpectedUtility(const State& state, const Policy& s1, const Policy& s2);
double ExpectedUtility(const Game& game, const Policy& s1, const Policy& s2);

struct ReachTriple {
  double p1 = 1.0;
  double p2 = 1.0;
  double chance = 1.0;
  double Joint() const { return p1 * p2 * chance; }
};

// Per-actor reach of the history obtained by playing `actions` from the root.
ReachTriple Reach(const Game& game, const Policy& s1, const Policy& s2,
                  const std::vector<int>& actions);

struct InfosetInfo {
  std::string key;
  std::vector<std::string> labels;
  std::vector<std::string> histories;  // History keys, in traversal order.
};

// Infosets where `player` acts, sorted by key bytes. Throws NodeCapExceeded
// when the tree has more than `node_cap` nodes.
std::vector<InfosetInfo> EnumerateInfosets(const Game& game, Player player,
                                           int64_t node_cap = NodeCap());

// Uniform distribution at every infoset of `player`.
TabularPolicy UniformStrategy(const Game& game, Player player,
                              int64_t node_cap = NodeCap());

// Tabulates any policy of `player` over all of its infosets.
TabularPolicy Tabulate(const Game& game, Player player, const Policy& policy,
                       int64_t node_cap = NodeCap());

// Visits every history in depth-first order, children in action order.
// Returning false from `visit` skips the subtree.
void ForEachHistory(const State& root,
                    const std::function<bool(const State&)>& visit);

// Exhaustive structural checks on a small game. Returns human-readable
// violations; an empty list means the game passed.
struct GameCheckOptions {
  int64_t node_cap = 1'000'000;
  bool check_perfect_recall = true;
  bool check_public_closure = true;
};
std::vector<std::string> CheckGame(const Game& game,
                                   const GameCheckOptions& options = {});

// Sum of joint reach over all terminals (should be 1).
double TerminalReachMass(const Game& game, const Policy& s1, const Policy& s2);

}  // namespace abd

#endif  // ABD_EFG_TRAVERSAL_H_
