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


#include "abd/agent/resolver.h"

#include <chrono>
#include <utility>

#include "abd/solver/best_response.h"

namespace abd {

void ValidateAgentConfig(const AgentConfig& config) {
  if (!(config.p >= 0.0 && config.p <= 1.0)) {
    throw InvalidArgument("p must lie in [0, 1], got " + FormatProb(config.p));
  }
  if (config.fixed_opponent == nullptr) {
    throw InvalidArgument("agent needs a fixed opponent strategy");
  }
  if (config.depth.d < 1) {
    throw InvalidArgument("depth must be at least 1, got " +
                          std::to_string(config.depth.d));
  }
  if (config.leaf_mode == LeafMode::kMatrix &&
      (config.p1.size() == 0 || config.p2.size() == 0)) {
    throw InvalidArgument("matrix leaves need non-empty portfolios");
  }
  ValidateValueSource(config.values);
  ValidateCfrConfig(config.cfr);
}

int ArgmaxAction(const std::vector<double>& probs, double tol) {
  if (probs.empty()) throw InvalidArgument("argmax of an empty distribution");
  double best = probs[0];
  for (double p : probs) best = std::max(best, p);
  for (size_t a = 0; a < probs.size(); ++a) {
    if (probs[a] >= best - tol) return static_cast<int>(a);
  }
  return 0;
}

Resolver::Resolver(GamePtr base, AgentConfig config)
    : base_(std::move(base)), config_(std::move(config)) {
  if (base_ == nullptr) throw InvalidArgument("resolver needs a game");
  ValidateAgentConfig(config_);
  if (config_.p1.size() > 0 && config_.p2.size() > 0) {
    values_ = std::make_shared<LeafValueTable>(
        config_.p1, config_.p2, config_.fixed_opponent, config_.values);
  }
}

bool Resolver::UsesFastPath() const {
  return config_.fast_path && config_.p == 1.0 &&
         config_.leaf_mode == LeafMode::kMatrix;
}

std::shared_ptr<const DepthLimitedGame> Resolver::BuildResolveGame(
    const TrunkRecord& trunk) const {
  auto gadget =
      MakeGadget(base_, trunk, {config_.p, config_.fixed_opponent, {}});
  return MakeDepthLimited(
      gadget,
      {config_.depth, config_.leaf_mode, config_.fixed_column_in_free},
      values_);
}

ResolveResult Resolver::Resolve(const TrunkRecord& trunk) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(trunk.path);
    if (it != cache_.end()) return it->second;
  }
  auto start = std::chrono::steady_clock::now();
  auto dl = BuildResolveGame(trunk);
  GameTree::Options options;
  options.node_cap = config_.node_cap;
  GameTree tree = GameTree::Build(*dl->NewRoot(), options);
  SolveReport report = SolveTree(tree, config_.cfr);
  const auto& gadget = static_cast<const GadgetGame&>(dl->inner());
  ResolveResult result;
  for (const WeightedHistory& h : gadget.public_state()) {
    if (h.history->Role() != PlayerRole::kP1) continue;
    std::string key = h.history->InfosetKey(Player::kP1);
    if (result.strategy.Contains(key)) continue;
    const TabularPolicy::Entry* entry = report.average[0].Find(key);
    if (entry != nullptr) {
      result.strategy.Set(key, entry->labels, entry->probs);
    } else {
      int n = h.history->NumActions();
      result.strategy.SetAt(*h.history, std::vector<double>(n, 1.0 / n));
    }
  }
  result.value = report.value;
  result.nash_conv = report.nash_conv;
  result.nodes = tree.num_nodes();
  result.uniform_fallback = gadget.uniform_fallback();
  result.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  std::lock_guard<std::mutex> lock(mu_);
  ++resolves_;
  return cache_.emplace(trunk.path, std::move(result)).first->second;
}

std::shared_ptr<const DepthLimitedGame> Resolver::BuildFastGame(
    const std::vector<std::string>& path,
    const std::string& p1_infoset) const {
  TrunkRecord trunk;
  trunk.path = path;
  auto gadget =
      MakeGadget(base_, trunk, {1.0, config_.fixed_opponent, p1_infoset});
  return MakeDepthLimited(gadget, {config_.depth, LeafMode::kMatrix, false},
                          values_);
}

FastResolveResult Resolver::FastResolve(const std::vector<std::string>& path,
                                        const std::string& p1_infoset) {
  if (config_.p != 1.0 || config_.leaf_mode != LeafMode::kMatrix) {
    throw InvalidArgument("the best-response fast path needs p = 1 and "
                          "matrix leaves");
  }
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = fast_cache_.find(p1_infoset);
    if (it != fast_cache_.end()) return it->second;
  }
  auto dl = BuildFastGame(path, p1_infoset);
  // P2 never acts in the fixed branch, so the opponent policy is unused.
  UniformPolicy unused;
  BestResponseResult br =
      BestResponse(*dl->NewRoot(), Player::kP1, unused, config_.node_cap);
  FastResolveResult result;
  result.nodes_visited = br.nodes_visited;
  const TabularPolicy::Entry* entry = br.policy.Find(p1_infoset);
  if (entry == nullptr) {
    throw AbdError("fast path did not reach P1 infoset hex " +
                   HexEncode(p1_infoset));
  }
  result.probs = entry->probs;
  auto values = br.action_values.find(p1_infoset);
  if (values != br.action_values.end()) result.action_values = values->second;
  std::lock_guard<std::mutex> lock(mu_);
  ++resolves_;
  return fast_cache_.emplace(p1_infoset, std::move(result)).first->second;
}

int64_t Resolver::resolves() const {
  std::lock_guard<std::mutex> lock(mu_);
  return resolves_;
}

}  // namespace abd
