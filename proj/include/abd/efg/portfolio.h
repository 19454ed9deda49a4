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

#ifndef ABD_EFG_PORTFOLIO_H_
#define ABD_EFG_PORTFOLIO_H_

#include <string>
#include <vector>

#include "abd/efg/policy.h"

namespace abd {

// Ordered, named list of strategies of one player.
struct Portfolio {
  Player owner = Player::kP1;
  std::string name;
  std::vector<PolicyPtr> entries;

  int size() const { return static_cast<int>(entries.size()); }
  const Policy& at(int i) const { return *entries.at(i); }
  std::string EntryName(int i) const { return entries.at(i)->Name(); }
};

}  // namespace abd

#endif  // ABD_EFG_PORTFOLIO_H_
