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


#include "abd/agent/agent.h"

#include <utility>

namespace abd {

AbdAgent::AbdAgent(std::shared_ptr<Resolver> resolver, std::string name)
    : resolver_(std::move(resolver)), name_(std::move(name)) {
  if (resolver_ == nullptr) throw InvalidArgument("agent needs a resolver");
}

void AbdAgent::NewEpisode() { trunk_ = TrunkRecord(); }

void AbdAgent::Observe(const State& state) {
  trunk_.path.push_back(state.PublicKey());
}

std::vector<double> AbdAgent::Act(const State& state) {
  if (state.Role() != PlayerRole::kP1) {
    throw InvalidArgument("the agent only acts as P1");
  }
  if (trunk_.path.empty() || trunk_.path.back() != state.PublicKey()) {
    throw AbdError("agent asked to act at a public state it did not observe");
  }
  std::string key = state.InfosetKey(Player::kP1);
  if (!trunk_.p1.Contains(key)) {
    if (resolver_->UsesFastPath()) {
      trunk_.p1.SetAt(state, resolver_->FastResolve(trunk_.path, key).probs);
    } else {
      ResolveResult r = resolver_->Resolve(trunk_);
      if (!r.strategy.Contains(key)) {
        throw MissingInfosetError(key);
      }
      trunk_.p1.Merge(r.strategy);
    }
  }
  return trunk_.p1.ActionProbs(state);
}

}  // namespace abd
