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


#ifndef ABD_AGENT_AGENT_H_
#define ABD_AGENT_AGENT_H_

#include <memory>
#include <string>
#include <vector>

#include "abd/agent/gadget.h"
#include "abd/agent/resolver.h"
#include "abd/efg/policy.h"

namespace abd {

// A P1 player that may keep state within an episode.
class EpisodePlayer {
 public:
  virtual ~EpisodePlayer() = default;
  virtual void NewEpisode() = 0;
  // Called at every history of the episode, including the root and the
  // terminal one. Only public information may be used.
  virtual void Observe(const State& state) = 0;
  // Distribution over actions at a history where P1 acts.
  virtual std::vector<double> Act(const State& state) = 0;
  virtual std::string Name() const = 0;
};

// Wraps a stateless policy.
class PolicyPlayer : public EpisodePlayer {
 public:
  explicit PolicyPlayer(PolicyPtr policy) : policy_(std::move(policy)) {}
  void NewEpisode() override {}
  void Observe(const State&) override {}
  std::vector<double> Act(const State& state) override {
    return policy_->ActionProbs(state);
  }
  std::string Name() const override { return policy_->Name(); }

 private:
  PolicyPtr policy_;
};

// Resolves once per public state in which it acts and keeps what it
// resolved in the trunk.
class AbdAgent : public EpisodePlayer {
 public:
  AbdAgent(std::shared_ptr<Resolver> resolver, std::string name = "abd");

  void NewEpisode() override;
  void Observe(const State& state) override;
  std::vector<double> Act(const State& state) override;
  std::string Name() const override { return name_; }

  const TrunkRecord& trunk() const { return trunk_; }
  const Resolver& resolver() const { return *resolver_; }

 private:
  std::shared_ptr<Resolver> resolver_;
  std::string name_;
  TrunkRecord trunk_;
};

}  // namespace abd

#endif  // ABD_AGENT_AGENT_H_
