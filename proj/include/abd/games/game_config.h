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

#ifndef ABD_GAMES_GAME_CONFIG_H_
#define ABD_GAMES_GAME_CONFIG_H_

#include <string>
#include <vector>

#include "abd/efg/game.h"
#include "abd/games/battleships.h"
#include "abd/games/poker.h"

namespace abd {

struct ConfigEntry {
  std::string key;
  std::string value;
  int line = 0;
};

// `key = value` lines; blank lines and lines starting with '#' are skipped.
// Duplicate keys are rejected.
std::vector<ConfigEntry> ParseKeyValues(const std::string& text,
                                        const std::string& source);
std::vector<ConfigEntry> ReadKeyValueFile(const std::string& path);

struct GameConfig {
  std::string game = "battleships";  // battleships | leduc | kuhn
  BattleshipsConfig battleships;
  std::string opponent;  // Empty when not given.
};

// Consumes the game keys (game, width, height, ships, first_shooter,
// opponent). Other entries are appended to `rest` when it is non-null and
// rejected otherwise.
GameConfig GameConfigFromEntries(const std::vector<ConfigEntry>& entries,
                                 const std::string& source,
                                 std::vector<ConfigEntry>* rest = nullptr);
GameConfig LoadGameConfig(const std::string& path);

GamePtr BuildGame(const GameConfig& config);

// Integer and real parsing with config-style errors.
int ParseIntValue(const ConfigEntry& entry, const std::string& source);
double ParseRealValue(const ConfigEntry& entry, const std::string& source);

}  // namespace abd

#endif  // ABD_GAMES_GAME_CONFIG_H_
