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

#ifndef ABD_EFG_STRATEGY_IO_H_
#define ABD_EFG_STRATEGY_IO_H_

#include <iosfwd>
#include <string>

#include "abd/efg/policy.h"

namespace abd {

// Text format: a header line
//   #strategy v1 game=<game_id> player=<1|2>
// then one line per infoset, sorted by key bytes:
//   <infoset_key_hex>\t<label>=<prob>[,<label>=<prob>]*
// with probabilities printed to 12 significant digits.
struct StoredStrategy {
  TabularPolicy policy;
  std::string game_id;
  Player player = Player::kP1;
};

void WriteStrategy(std::ostream& out, const TabularPolicy& policy,
                   const std::string& game_id, Player player);
std::string StrategyToString(const TabularPolicy& policy,
                             const std::string& game_id, Player player);
void SaveStrategy(const std::string& path, const TabularPolicy& policy,
                  const std::string& game_id, Player player);

// `source` names the input in error messages.
StoredStrategy ReadStrategy(std::istream& in, const std::string& source);
StoredStrategy LoadStrategy(const std::string& path);

}  // namespace abd

#endif  // ABD_EFG_STRATEGY_IO_H_
