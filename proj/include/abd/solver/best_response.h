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


#ifndef ABD_SOLVER_BEST_RESPONSE_H_
#define ABD_SOLVER_BEST_RESPONSE_H_

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "abd/efg/game.h"
#include "abd/efg/policy.h"

namespace abd {

struct BestResponseResult {
  TabularPolicy policy;  // Pure; ties go to the lowest action index.
  double value = 0.0;    // Expected utility of the responder.
  int64_t nodes_visited = 0;
  // Per responder infoset: value of each action, weighted by the opponent
  // and chance reach of the infoset's histories.
  std::unordered_map<std::string, std::vector<double>> action_values;
};

// Best response on the implicit tree, without materializing it. Histories
// the opponent or chance never reaches are skipped.
BestResponseResult BestResponse(const State& root, Player responder,
                                const Policy& opponent,
                                int64_t node_cap = NodeCap());
BestResponseResult BestResponse(const Game& game, Player responder,
                                const Policy& opponent,
                                int64_t node_cap = NodeCap());

}  // namespace abd

#endif  // ABD_SOLVER_BEST_RESPONSE_H_
