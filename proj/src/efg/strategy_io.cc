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

#include "abd/efg/strategy_io.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace abd {

void WriteStrategy(std::ostream& out, const TabularPolicy& policy,
                   const std::string& game_id, Player player) {
  out << "#strategy v1 game=" << game_id
      << " player=" << (player == Player::kP1 ? 1 : 2) << "\n";
  for (const std::string& key : policy.SortedKeys()) {
    const TabularPolicy::Entry& entry = *policy.Find(key);
    out << HexEncode(key) << '\t';
    for (size_t a = 0; a < entry.probs.size(); ++a) {
      if (a > 0) out << ',';
      out << entry.labels[a] << '=' << FormatProb(entry.probs[a]);
    }
    out << '\n';
  }
}

std::string StrategyToString(const TabularPolicy& policy,
                             const std::string& game_id, Player player) {
  std::ostringstream out;
  WriteStrategy(out, policy, game_id, player);
  return out.str();
}

void SaveStrategy(const std::string& path, const TabularPolicy& policy,
                  const std::string& game_id, Player player) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw AbdError("cannot open '" + path + "' for writing");
  WriteStrategy(out, policy, game_id, player);
  if (!out) throw AbdError("failed writing '" + path + "'");
}

StoredStrategy ReadStrategy(std::istream& in, const std::string& source) {
  StoredStrategy stored;
  std::string line;
  int line_no = 0;
  if (!std::getline(in, line)) {
    throw ParseError(source, 1, "empty strategy file");
  }
  ++line_no;
  {
    std::istringstream header(line);
    std::string magic, version, game, player;
    header >> magic >> version >> game >> player;
    std::string extra;
    if (magic != "#strategy" || version != "v1" ||
        game.rfind("game=", 0) != 0 || player.rfind("player=", 0) != 0 ||
        (header >> extra)) {
      throw ParseError(source, line_no,
                       "expected '#strategy v1 game=<id> player=<1|2>'");
    }
    stored.game_id = game.substr(5);
    std::string p = player.substr(7);
    if (p == "1") {
      stored.player = Player::kP1;
    } else if (p == "2") {
      stored.player = Player::kP2;
    } else {
      throw ParseError(source, line_no, "player must be 1 or 2");
    }
  }
  std::string previous_key;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError(source, line_no, "missing tab after infoset key");
    }
    std::string key;
    try {
      key = HexDecode(line.substr(0, tab));
    } catch (const AbdError& e) {
      throw ParseError(source, line_no, e.what());
    }
    if (stored.policy.Contains(key)) {
      throw ParseError(source, line_no, "duplicate infoset key");
    }
    std::vector<std::string> labels;
    std::vector<double> probs;
    std::stringstream items(line.substr(tab + 1));
    std::string item;
    while (std::getline(items, item, ',')) {
      size_t eq = item.rfind('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
        throw ParseError(source, line_no,
                         "expected <label>=<prob>, got '" + item + "'");
      }
      std::string number = item.substr(eq + 1);
      char* end = nullptr;
      double p = std::strtod(number.c_str(), &end);
      if (end == number.c_str() || *end != '\0') {
        throw ParseError(source, line_no, "bad probability '" + number + "'");
      }
      labels.push_back(item.substr(0, eq));
      probs.push_back(p);
    }
    if (probs.empty()) throw ParseError(source, line_no, "no actions");
    try {
      ValidateDistribution(probs, static_cast<int>(probs.size()),
                           "infoset hex " + line.substr(0, tab));
    } catch (const AbdError& e) {
      throw ParseError(source, line_no, e.what());
    }
    stored.policy.Set(key, std::move(labels), std::move(probs));
  }
  stored.policy.set_name("file:" + source);
  return stored;
}

StoredStrategy LoadStrategy(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw AbdError("cannot open strategy file '" + path + "'");
  return ReadStrategy(in, path);
}

}  // namespace abd
