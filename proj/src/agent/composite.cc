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


#include "abd/agent/composite.h"

#include <chrono>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace abd {
namespace {

class Extractor {
 public:
  explicit Extractor(Resolver& resolver) : resolver_(resolver) {}

  void Visit(const std::vector<std::shared_ptr<const State>>& histories) {
    ++public_states_;
    bool p1_acts = false;
    for (const auto& h : histories) {
      if (h->Role() == PlayerRole::kP1) p1_acts = true;
    }
    if (p1_acts) ResolveHere(histories);
    std::map<std::string, std::vector<std::shared_ptr<const State>>> children;
    for (const auto& h : histories) {
      if (h->IsTerminal()) continue;
      std::vector<double> probs;
      if (h->IsChance()) {
        probs = h->ChanceProbs();
      } else if (h->Role() == PlayerRole::kP1) {
        probs = trunk_.p1.ActionProbs(*h);
      } else {
        probs.assign(h->NumActions(), 1.0);
      }
      for (int a = 0; a < h->NumActions(); ++a) {
        if (probs[a] <= 0.0) continue;
        std::shared_ptr<const State> child = h->Child(a);
        children[child->PublicKey()].push_back(child);
      }
    }
    for (const auto& [key, group] : children) {
      trunk_.path.push_back(key);
      Visit(group);
      trunk_.path.pop_back();
    }
  }

  TrunkRecord& trunk() { return trunk_; }
  int64_t public_states() const { return public_states_; }

 private:
  void ResolveHere(const std::vector<std::shared_ptr<const State>>& histories) {
    if (resolver_.UsesFastPath()) {
      for (const auto& h : histories) {
        if (h->Role() != PlayerRole::kP1) continue;
        std::string key = h->InfosetKey(Player::kP1);
        if (trunk_.p1.Contains(key)) continue;
        FastResolveResult r = resolver_.FastResolve(trunk_.path, key);
        trunk_.p1.SetAt(*h, r.probs);
      }
      return;
    }
    ResolveResult r = resolver_.Resolve(trunk_);
    trunk_.p1.Merge(r.strategy);
  }

  Resolver& resolver_;
  TrunkRecord trunk_;
  int64_t public_states_ = 0;
};

}  // namespace

CompositeResult ExtractContinualStrategy(Resolver& resolver) {
  auto start = std::chrono::steady_clock::now();
  int64_t before = resolver.resolves();
  Extractor extractor(resolver);
  std::shared_ptr<const State> root = resolver.base().NewRoot();
  extractor.trunk().path.push_back(root->PublicKey());
  extractor.Visit({root});
  CompositeResult result;
  result.strategy = extractor.trunk().p1;
  result.strategy.set_name("composite");
  result.public_states = extractor.public_states();
  result.resolves = resolver.resolves() - before;
  result.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return result;
}

}  // namespace abd
