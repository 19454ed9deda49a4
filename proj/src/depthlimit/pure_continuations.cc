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


#include "abd/depthlimit/pure_continuations.h"

#include <algorithm>
#include <memory>
#include <utility>

#include "abd/efg/policy.h"

namespace abd {
namespace {

class PlanEnumerator {
 public:
  PlanEnumerator(Player owner, int64_t cap) : owner_(owner), cap_(cap) {}

  void Run(std::vector<std::unique_ptr<State>> work, PurePlan plan) {
    while (!work.empty()) {
      std::unique_ptr<State> s = std::move(work.back());
      work.pop_back();
      if (s->IsTerminal()) continue;
      if (s->ActingPlayer() != owner_) {
        std::vector<double> probs;
        if (s->IsChance()) probs = s->ChanceProbs();
        for (int a = 0; a < s->NumActions(); ++a) {
          if (s->IsChance() && probs[a] <= 0.0) continue;
          work.push_back(s->Child(a));
        }
        continue;
      }
      std::string key = s->InfosetKey(owner_);
      if (set_.labels.count(key) == 0) set_.labels[key] = s->ActionLabels();
      auto it = plan.find(key);
      if (it != plan.end()) {
        work.push_back(s->Child(it->second));
        continue;
      }
      for (int a = 0; a < s->NumActions(); ++a) {
        std::vector<std::unique_ptr<State>> branch;
        branch.reserve(work.size() + 1);
        for (const auto& w : work) branch.push_back(w->Clone());
        branch.push_back(s->Child(a));
        PurePlan extended = plan;
        extended[key] = a;
        Run(std::move(branch), std::move(extended));
      }
      return;
    }
    int64_t count = static_cast<int64_t>(set_.plans.size());
    if (count >= cap_) throw NodeCapExceeded(count + 1, cap_);
    set_.plans.push_back(std::move(plan));
  }

  PlanSet Take() { return std::move(set_); }

 private:
  Player owner_;
  int64_t cap_;
  PlanSet set_;
};

}  // namespace

PlanSet EnumeratePurePlans(
    const std::vector<const State*>& histories, Player owner, int64_t cap) {
  std::vector<std::unique_ptr<State>> work;
  // Reverse so that the first history is expanded first.
  for (auto it = histories.rbegin(); it != histories.rend(); ++it) {
    work.push_back((*it)->Clone());
  }
  PlanEnumerator enumerator(owner, cap);
  enumerator.Run(std::move(work), {});
  return enumerator.Take();
}

Portfolio PureContinuationPortfolio(const Game& game, Player owner,
                                    DepthSpec depth, int64_t cap) {
  std::unique_ptr<State> root = game.NewRoot();
  std::vector<std::unique_ptr<State>> frontier = FrontierHistories(*root, depth);
  std::map<std::string, std::vector<const State*>> groups;
  for (const auto& h : frontier) {
    groups[h->InfosetKey(owner)].push_back(h.get());
  }
  std::vector<PlanSet> sets;
  size_t width = 1;
  int64_t total = 0;
  for (const auto& [key, histories] : groups) {
    sets.push_back(EnumeratePurePlans(histories, owner, cap));
    total += static_cast<int64_t>(sets.back().plans.size());
    if (total > cap) throw NodeCapExceeded(total, cap);
    width = std::max(width, sets.back().plans.size());
  }
  Portfolio portfolio;
  portfolio.owner = owner;
  portfolio.name = "pure_" + PlayerName(owner) + "_d" +
                   std::to_string(depth.d);
  for (size_t k = 0; k < width; ++k) {
    auto policy = std::make_shared<TabularPolicy>(
        "pure" + std::to_string(k), TabularPolicy::Missing::kUniform);
    for (const PlanSet& set : sets) {
      if (set.plans.empty()) continue;
      const PurePlan& plan = set.plans[k % set.plans.size()];
      for (const auto& [key, action] : plan) {
        const std::vector<std::string>& labels = set.labels.at(key);
        std::vector<double> probs(labels.size(), 0.0);
        probs[action] = 1.0;
        policy->Set(key, labels, std::move(probs));
      }
    }
    portfolio.entries.push_back(policy);
  }
  return portfolio;
}

}  // namespace abd
