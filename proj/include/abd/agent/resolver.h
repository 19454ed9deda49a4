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


#ifndef ABD_AGENT_RESOLVER_H_
#define ABD_AGENT_RESOLVER_H_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "abd/agent/gadget.h"
#include "abd/depthlimit/depth_limited_game.h"
#include "abd/depthlimit/leaf_values.h"
#include "abd/efg/portfolio.h"
#include "abd/solver/cfr.h"

namespace abd {

struct AgentConfig {
  double p = 1.0;
  DepthSpec depth{1};
  Portfolio p1;
  Portfolio p2;
  PolicyPtr fixed_opponent;
  ValueSource values;
  CfrConfig cfr;
  // kRational gives the continual depth-limited baselines: the fixed
  // opponent turns rational beyond the depth limit instead of meeting
  // portfolio leaves. Portfolios are still used in the free branch.
  LeafMode leaf_mode = LeafMode::kMatrix;
  bool fixed_column_in_free = false;
  // With p = 1 and matrix leaves, resolve by one backward-induction pass
  // over the current infoset instead of running CFR on the gadget.
  bool fast_path = true;
  int64_t node_cap = NodeCap();
};

void ValidateAgentConfig(const AgentConfig& config);

struct ResolveResult {
  // P1 behavior at every P1 infoset of the resolved public state.
  TabularPolicy strategy{"resolve", TabularPolicy::Missing::kUniform};
  double value = 0.0;
  double nash_conv = 0.0;
  int64_t nodes = 0;
  double seconds = 0.0;
  bool uniform_fallback = false;
};

struct FastResolveResult {
  std::vector<double> probs;
  std::vector<double> action_values;
  int64_t nodes_visited = 0;
};

// Lowest action index whose probability is within `tol` of the maximum.
int ArgmaxAction(const std::vector<double>& probs, double tol = 1e-9);

// Solves re-solving games for one base game and configuration. Leaf values
// and results are cached; all results are deterministic functions of the
// public path, so the cache is shared across episodes.
class Resolver {
 public:
  Resolver(GamePtr base, AgentConfig config);

  const Game& base() const { return *base_; }
  const GamePtr& base_ptr() const { return base_; }
  const AgentConfig& config() const { return config_; }
  bool UsesFastPath() const;

  // Depth-limited re-solving game for the public state at trunk.path.back().
  std::shared_ptr<const DepthLimitedGame> BuildResolveGame(
      const TrunkRecord& trunk) const;
  ResolveResult Resolve(const TrunkRecord& trunk);
  // Requires p = 1 and matrix leaves. `path` leads to the infoset.
  FastResolveResult FastResolve(const std::vector<std::string>& path,
                                const std::string& p1_infoset);
  // Game the fast path traverses.
  std::shared_ptr<const DepthLimitedGame> BuildFastGame(
      const std::vector<std::string>& path,
      const std::string& p1_infoset) const;

  int64_t resolves() const;
  LeafValueTable* leaf_values() const { return values_.get(); }

 private:
  GamePtr base_;
  AgentConfig config_;
  std::shared_ptr<LeafValueTable> values_;
  mutable std::mutex mu_;
  std::map<std::vector<std::string>, ResolveResult> cache_;
  std::map<std::string, FastResolveResult> fast_cache_;
  int64_t resolves_ = 0;
};

}  // namespace abd

#endif  // ABD_AGENT_RESOLVER_H_
