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


#include "abd/robust/rnr.h"

#include <algorithm>

#include "abd/efg/parallel.h"
#include "abd/solver/metrics.h"

namespace abd {

RnrResult RestrictedNashResponse(const GamePtr& game, const RobustSpec& spec,
                                 const CfrConfig& config) {
  auto robust = MakeRbAdapt(game, spec);
  RnrResult result;
  result.p = spec.p;
  result.report = CfrSolve(*robust, config);
  result.response = result.report.average[0];
  result.response.set_name("rnr_p" + FormatProb(spec.p));
  result.free_opponent = TabularPolicy("rnr_free_opponent");
  const std::string tag = kFreeTag;
  for (const auto& [key, entry] : result.report.average[1].table()) {
    if (key.compare(0, tag.size(), tag) == 0) {
      result.free_opponent.Set(key.substr(tag.size()), entry.labels,
                               entry.probs);
    }
  }
  result.gain = Gain(*game, result.response, *spec.fixed_opponent);
  result.exploitability = Exploitability(*game, result.response, Player::kP1);
  return result;
}

std::vector<double> DefaultPGrid() {
  std::vector<double> grid;
  for (int i = 0; i <= 10; ++i) grid.push_back(i / 10.0);
  return grid;
}

std::vector<RnrResult> ParetoSweep(const GamePtr& game,
                                   const PolicyPtr& fixed_opponent,
                                   std::vector<double> p_list,
                                   const CfrConfig& config) {
  std::sort(p_list.begin(), p_list.end());
  // Solve the game value once before fanning out.
  GameValue(*game);
  std::vector<RnrResult> rows(p_list.size());
  ParallelFor(static_cast<int64_t>(p_list.size()), [&](int64_t i) {
    RobustSpec spec{p_list[i], fixed_opponent};
    rows[i] = RestrictedNashResponse(game, spec, config);
  });
  return rows;
}

}  // namespace abd
