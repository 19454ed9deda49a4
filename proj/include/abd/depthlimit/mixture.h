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


#ifndef ABD_DEPTHLIMIT_MIXTURE_H_
#define ABD_DEPTHLIMIT_MIXTURE_H_

#include "abd/depthlimit/depth_limited_game.h"
#include "abd/efg/policy.h"
#include "abd/efg/portfolio.h"

namespace abd {

// Turns an `owner` strategy of a matrix-leaf depth-limited game of `game`
// into a behavioral strategy of `game`: entries above the frontier are
// copied, and below each frontier infoset L the portfolio entries are mixed
// with the weights chosen at L, each weighted by its own reach. Owner keys
// of the depth-limited game must equal those of `game` (true for the base
// game and for P1 of a robust game).
TabularPolicy ComposeWithPortfolio(const Game& game, Player owner,
                                   DepthSpec depth,
                                   const TabularPolicy& dl_strategy,
                                   const Portfolio& portfolio);

}  // namespace abd

#endif  // ABD_DEPTHLIMIT_MIXTURE_H_
