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


#ifndef ABD_AGENT_COMPOSITE_H_
#define ABD_AGENT_COMPOSITE_H_

#include <cstdint>

#include "abd/agent/resolver.h"
#include "abd/efg/policy.h"

namespace abd {

struct CompositeResult {
  // Behavior of the agent at every P1 infoset it can reach.
  TabularPolicy strategy{"composite", TabularPolicy::Missing::kUniform};
  int64_t public_states = 0;
  int64_t resolves = 0;
  double seconds = 0.0;
};

// Plays the agent through every public state it can reach (any opponent
// action, chance outcomes of positive probability, its own actions of
// positive probability) and records what it would do. The agent is a
// deterministic function of the public path, so this is its behavior in
// every episode.
CompositeResult ExtractContinualStrategy(Resolver& resolver);

}  // namespace abd

#endif  // ABD_AGENT_COMPOSITE_H_
