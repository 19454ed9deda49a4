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

#include "abd/efg/traversal.h"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace abd {

double ExpectedUtility(const State& state, const Policy& s1,
                       const Policy& s2) {
  switch (state.Role()) {
    case PlayerRole::kTerminal:
      return state.UtilityP1();
    case PlayerRole::kChance: {
      std::vector<double> probs = state.ChanceProbs();
      double v = 0.0;
      for (int a = 0; a < static_cast<int>(probs.size()); ++a) {
        if (probs[a] > 0.0) v += probs[a] * ExpectedUtility(*state.Child(a), s1, s2);
      }
      return v;
    }
    default: {
      const Policy& s = state.Role() == PlayerRole::kP1 ? s1 : s2;
      std::vector<double> probs = s.ActionProbs(state);
      double v = 0.0;
      for (int a = 0; a < static_cast<int>(probs.size()); ++a) {
        if (probs[a] > 0.0) v += probs[a] * ExpectedUtility(*state.Child(a), s1, s2);
      }
      return v;
    }
  }
}

double ExpectedUtility(const Game& game, const Policy& s1, const Policy& s2) {
  return ExpectedUtility(*game.NewRoot(), s1, s2);
}

ReachTriple Reach(const Game& game, const Policy& s1, const Policy& s2,
                  const std::vector<int>& actions) {
  ReachTriple reach;
  auto state = game.NewRoot();
  for (int a : actions) {
    if (state->IsTerminal() || a < 0 || a >= state->NumActions()) {
      throw InvalidArgument("action sequence leaves the game tree at '" +
                            state->HistoryKey() + "'");
    }
    switch (state->Role()) {
      case PlayerRole::kChance:
        reach.chance *= state->ChanceProbs()[a];
        break;
      case PlayerRole::kP1:
        reach.p1 *= s1.ActionProbs(*state)[a];
        break;
      case PlayerRole::kP2:
        reach.p2 *= s2.ActionProbs(*state)[a];
        break;
      case PlayerRole::kTerminal:
        break;
    }
    state->ApplyAction(a);
  }
  return reach;
}

void ForEachHistory(const State& root,
                    const std::function<bool(const State&)>& visit) {
  if (!visit(root)) return;
  if (root.IsTerminal()) return;
  for (int a = 0; a < root.NumActions(); ++a) {
    ForEachHistory(*root.Child(a), visit);
  }
}

std::vector<InfosetInfo> EnumerateInfosets(const Game& game, Player player,
                                           int64_t node_cap) {
  std::map<std::string, InfosetInfo> infosets;
  int64_t count = 0;
  ForEachHistory(*game.NewRoot(), [&](const State& s) {
    if (++count > node_cap) throw NodeCapExceeded(count, node_cap);
    if (s.ActingPlayer() != player) return true;
    std::string key = s.InfosetKey(player);
    auto it = infosets.find(key);
    if (it == infosets.end()) {
      InfosetInfo info;
      info.key = key;
      info.labels = s.ActionLabels();
      it = infosets.emplace(key, std::move(info)).first;
    }
    it->second.histories.push_back(s.HistoryKey());
    return true;
  });
  std::vector<InfosetInfo> out;
  out.reserve(infosets.size());
  for (auto& [key, info] : infosets) out.push_back(std::move(info));
  return out;
}

TabularPolicy Tabulate(const Game& game, Player player, const Policy& policy,
                       int64_t node_cap) {
  TabularPolicy table(policy.Name());
  int64_t count = 0;
  ForEachHistory(*game.NewRoot(), [&](const State& s) {
    if (++count > node_cap) throw NodeCapExceeded(count, node_cap);
    if (s.ActingPlayer() != player) return true;
    std::string key = s.InfosetKey(player);
    if (!table.Contains(key)) {
      std::vector<double> probs = policy.ActionProbs(s);
      ValidateDistribution(probs, s.NumActions(),
                           "policy '" + policy.Name() + "' at infoset hex " +
                               HexEncode(key));
      table.Set(key, s.ActionLabels(), std::move(probs));
    }
    return true;
  });
  return table;
}

TabularPolicy UniformStrategy(const Game& game, Player player,
                              int64_t node_cap) {
  TabularPolicy table = Tabulate(game, player, UniformPolicy(), node_cap);
  table.set_name("uniform");
  return table;
}

namespace {

struct CheckWork {
  const Game* game;
  GameCheckOptions options;
  std::vector<std::string> errors;
  int64_t count = 0;
  std::unordered_map<std::string, std::vector<std::string>> labels_by_key[2];
  std::unordered_map<std::string, std::string> recall_by_key[2];
  std::unordered_map<std::string, std::string> public_by_key[2];

  void Report(const std::string& message) {
    if (errors.size() < 50) errors.push_back(message);
  }

  void Visit(const State& s, const std::string recall[2]) {
    if (++count > options.node_cap) {
      throw NodeCapExceeded(count, options.node_cap);
    }
    std::string pub = s.PublicKey();
    for (int i = 0; i < 2; ++i) {
      Player p = static_cast<Player>(i);
      std::string key = s.InfosetKey(p);
      if (options.check_public_closure) {
        auto [it, inserted] = public_by_key[i].emplace(key, pub);
        if (!inserted && it->second != pub) {
          Report("infoset hex " + HexEncode(key) + " of " + PlayerName(p) +
                 " spans several public states");
        }
      }
    }
    if (s.IsTerminal()) {
      double u = s.UtilityP1();
      if (u < game->MinUtility() - kProbTolerance ||
          u > game->MaxUtility() + kProbTolerance) {
        Report("terminal '" + s.HistoryKey() + "' utility out of range");
      }
      return;
    }
    std::vector<std::string> labels = s.ActionLabels();
    std::set<std::string> distinct(labels.begin(), labels.end());
    if (distinct.size() != labels.size()) {
      Report("duplicate action labels at '" + s.HistoryKey() + "'");
    }
    if (s.IsChance()) {
      try {
        ValidateDistribution(s.ChanceProbs(), s.NumActions(),
                             "chance node '" + s.HistoryKey() + "'");
      } catch (const AbdError& e) {
        Report(e.what());
      }
      for (int a = 0; a < s.NumActions(); ++a) Visit(*s.Child(a), recall);
      return;
    }
    Player p = *s.ActingPlayer();
    int pi = PlayerIndex(p);
    std::string key = s.InfosetKey(p);
    auto [lit, linserted] = labels_by_key[pi].emplace(key, labels);
    if (!linserted && lit->second != labels) {
      Report("histories of infoset hex " + HexEncode(key) +
             " disagree on legal actions");
    }
    if (options.check_perfect_recall) {
      auto [rit, rinserted] = recall_by_key[pi].emplace(key, recall[pi]);
      if (!rinserted && rit->second != recall[pi]) {
        Report("perfect recall violated at infoset hex " + HexEncode(key));
      }
    }
    for (int a = 0; a < s.NumActions(); ++a) {
      std::string next[2] = {recall[0], recall[1]};
      next[pi] += HexEncode(key) + ":" + labels[a] + ";";
      Visit(*s.Child(a), next);
    }
  }
};

}  // namespace

std::vector<std::string> CheckGame(const Game& game,
                                   const GameCheckOptions& options) {
  CheckWork work;
  work.game = &game;
  work.options = options;
  std::string recall[2];
  work.Visit(*game.NewRoot(), recall);
  return work.errors;
}

namespace {
double ReachMassRec(const State& s, const Policy& s1, const Policy& s2,
                    double w) {
  if (s.IsTerminal()) return w;
  std::vector<double> probs;
  if (s.IsChance()) {
    probs = s.ChanceProbs();
  } else {
    probs = (s.Role() == PlayerRole::kP1 ? s1 : s2).ActionProbs(s);
  }
  double total = 0.0;
  for (int a = 0; a < static_cast<int>(probs.size()); ++a) {
    if (probs[a] > 0.0) total += ReachMassRec(*s.Child(a), s1, s2, w * probs[a]);
  }
  return total;
}
}  // namespace

double TerminalReachMass(const Game& game, const Policy& s1,
                         const Policy& s2) {
  return ReachMassRec(*game.NewRoot(), s1, s2, 1.0);
}

}  // namespace abd
