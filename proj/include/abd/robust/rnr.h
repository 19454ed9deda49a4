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


#ifndef ABD_ROBUST_RNR_H_
#define ABD_ROBUST_RNR_H_

#include <vector>

#include "abd/efg/game.h"
#include "abd/efg/policy.h"
#include "abd/robust/rbadapt.h"
#include "abd/solver/cfr.h"

namespace abd {

struct RnrResult {
  double p = 0.0;
  TabularPolicy response;       // P1, keyed by base-game infosets.
  TabularPolicy free_opponent;  // P2's strategy in the free copy, untagged.
  double gain = 0.0;
  double exploitability = 0.0;
  SolveReport report;
};

RnrResult RestrictedNashResponse(const GamePtr& game, const RobustSpec& spec,
                                 const CfrConfig& config);

// Default grid 0, 0.1, ..., 1.
std::vector<double> DefaultPGrid();

// One result per p, sorted by p.
std::vector<RnrResult> ParetoSweep(const GamePtr& game,
                                   const PolicyPtr& fixed_opponent,
                                   std::vector<double> p_list,
                                   const CfrConfig& config);

}  // namespace abd

#endif  // ABD_ROBUST_RNR_H_
