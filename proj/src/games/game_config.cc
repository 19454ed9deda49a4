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

#include "abd/games/game_config.h"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "abd/games/scripted.h"

namespace abd {

namespace {
std::string Trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}
}  // namespace

std::vector<ConfigEntry> ParseKeyValues(const std::string& text,
                                        const std::string& source) {
  std::vector<ConfigEntry> entries;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = Trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos) {
      throw ParseError(source, line_no, "expected 'key = value'");
    }
    ConfigEntry entry{Trim(t.substr(0, eq)), Trim(t.substr(eq + 1)), line_no};
    if (entry.key.empty()) throw ParseError(source, line_no, "empty key");
    if (entry.value.empty()) {
      throw ParseError(source, line_no, "empty value for '" + entry.key + "'");
    }
    if (!seen.insert(entry.key).second) {
      throw ParseError(source, line_no, "duplicate key '" + entry.key + "'");
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<ConfigEntry> ReadKeyValueFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw AbdError("cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseKeyValues(buffer.str(), path);
}

int ParseIntValue(const ConfigEntry& entry, const std::string& source) {
  char* end = nullptr;
  long v = std::strtol(entry.value.c_str(), &end, 10);
  if (*end != '\0') {
    throw ParseError(source, entry.line,
                     "'" + entry.key + "' must be an integer");
  }
  return static_cast<int>(v);
}

double ParseRealValue(const ConfigEntry& entry, const std::string& source) {
  char* end = nullptr;
  double v = std::strtod(entry.value.c_str(), &end);
  if (*end != '\0') {
    throw ParseError(source, entry.line, "'" + entry.key + "' must be a number");
  }
  return v;
}

GameConfig GameConfigFromEntries(const std::vector<ConfigEntry>& entries,
                                 const std::string& source,
                                 std::vector<ConfigEntry>* rest) {
  GameConfig config;
  for (const ConfigEntry& e : entries) {
    if (e.key == "game") {
      if (e.value != "battleships" && e.value != "leduc" &&
          e.value != "kuhn") {
        throw ParseError(source, e.line,
                         "game must be battleships, leduc or kuhn");
      }
      config.game = e.value;
    } else if (e.key == "width" || e.key == "height") {
      int v = ParseIntValue(e, source);
      if (v < 1 || v > 8) {
        throw ParseError(source, e.line, e.key + " must be in [1, 8]");
      }
      (e.key == "width" ? config.battleships.width
                        : config.battleships.height) = v;
    } else if (e.key == "ships") {
      try {
        config.battleships.ships = ParseShips(e.value);
      } catch (const AbdError& err) {
        throw ParseError(source, e.line, err.what());
      }
    } else if (e.key == "first_shooter") {
      if (e.value == "p1") {
        config.battleships.first_shooter = Player::kP1;
      } else if (e.value == "p2") {
        config.battleships.first_shooter = Player::kP2;
      } else {
        throw ParseError(source, e.line, "first_shooter must be p1 or p2");
      }
    } else if (e.key == "opponent") {
      config.opponent = e.value;
    } else if (rest != nullptr) {
      rest->push_back(e);
    } else {
      throw ParseError(source, e.line, "unknown key '" + e.key + "'");
    }
  }
  return config;
}

GameConfig LoadGameConfig(const std::string& path) {
  return GameConfigFromEntries(ReadKeyValueFile(path), path);
}

GamePtr BuildGame(const GameConfig& config) {
  if (config.game == "battleships") return MakeBattleships(config.battleships);
  if (config.game == "leduc") return MakeLeduc();
  if (config.game == "kuhn") return MakeKuhn();
  throw InvalidArgument("unknown game '" + config.game + "'");
}

}  // namespace abd
