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


#ifndef ABD_DEPTHLIMIT_PURE_CONTINUATIONS_H_
#define ABD_DEPTHLIMIT_PURE_CONTINUATIONS_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "abd/depthlimit/depth_limited_game.h"
#include "abd/efg/game.h"
#include "abd/efg/portfolio.h"

namespace abd {

inline constexpr int64_t kDefaultPlanCap = 100'000;

// A pure plan: one action index per infoset it reaches.
using PurePlan = std::map<std::string, int>;

struct PlanSet {
  std::vector<PurePlan> plans;
  // Action labels of every infoset some plan assigns.
  std::map<std::string, std::vector<std::string>> labels;
};

// Reduced pure plans of `owner` below `histories`: infosets the plan itself
// makes unreachable are left unassigned. Throws NodeCapExceeded past `cap`.
PlanSet EnumeratePurePlans(
    const std::vector<const State*>& histories, Player owner,
    int64_t cap = kDefaultPlanCap);

// Portfolio of pure continuations of `owner` below the depth-limit frontier
// of `game`. Frontier infosets are independent, so entry k plays plan
// (k mod n_L) below each frontier infoset L; the size is max_L n_L and
// every combination of plans stays reachable through the per-infoset
// portfolio choice.
Portfolio PureContinuationPortfolio(const Game& game, Player owner,
                                    DepthSpec depth,
                                    int64_t cap = kDefaultPlanCap);

}  // namespace abd

#endif  // ABD_DEPTHLIMIT_PURE_CONTINUATIONS_H_
