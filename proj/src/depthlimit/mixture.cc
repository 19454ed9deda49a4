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


#include "abd/depthlimit/mixture.h"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace abd {
namespace {

struct Accumulator {
  std::vector<std::string> labels;
  std::vector<double> num;
  double den = 0.0;
};

// Adds x * own-reach of `policy` to every owner infoset below `s`.
void Accumulate(const State& s, Player owner, const Policy& policy, double x,
                double reach, std::set<std::string>* seen,
                std::map<std::string, Accumulator>* acc) {
  if (s.IsTerminal() || reach <= 0.0) return;
  if (s.ActingPlayer() != owner) {
    std::vector<double> probs;
    if (s.IsChance()) probs = s.ChanceProbs();
    for (int a = 0; a < s.NumActions(); ++a) {
      if (s.IsChance() && probs[a] <= 0.0) continue;
      Accumulate(*s.Child(a), owner, policy, x, reach, seen, acc);
    }
    return;
  }
  std::string key = s.InfosetKey(owner);
  std::vector<double> pi = policy.ActionProbs(s);
  if (seen->insert(key).second) {
    Accumulator& entry = (*acc)[key];
    if (entry.labels.empty()) {
      entry.labels = s.ActionLabels();
      entry.num.assign(pi.size(), 0.0);
    }
    entry.den += x * reach;
    for (size_t a = 0; a < pi.size(); ++a) entry.num[a] += x * reach * pi[a];
  }
  for (int a = 0; a < s.NumActions(); ++a) {
    Accumulate(*s.Child(a), owner, policy, x, reach * pi[a], seen, acc);
  }
}

}  // namespace

TabularPolicy ComposeWithPortfolio(const Game& game, Player owner,
                                   DepthSpec depth,
                                   const TabularPolicy& dl_strategy,
                                   const Portfolio& portfolio) {
  TabularPolicy out(dl_strategy.Name() + "+" + portfolio.name,
                    TabularPolicy::Missing::kUniform);
  for (const auto& [key, entry] : dl_strategy.table()) {
    if (key.find(kMvsTag) != std::string::npos) continue;
    out.Set(key, entry.labels, entry.probs);
  }
  std::unique_ptr<State> root = game.NewRoot();
  std::vector<std::unique_ptr<State>> frontier = FrontierHistories(*root, depth);
  std::map<std::string, std::vector<const State*>> groups;
  for (const auto& h : frontier) {
    groups[h->InfosetKey(owner)].push_back(h.get());
  }
  std::map<std::string, Accumulator> acc;
  int n = portfolio.size();
  for (const auto& [leaf_key, histories] : groups) {
    const TabularPolicy::Entry* pick = dl_strategy.Find(leaf_key + kMvsTag);
    std::vector<double> x(n, 1.0 / n);
    if (pick != nullptr) x = pick->probs;
    if (static_cast<int>(x.size()) != n) {
      throw AbdError("portfolio choice at frontier infoset hex " +
                     HexEncode(leaf_key) + " has " +
                     std::to_string(x.size()) + " entries, portfolio has " +
                     std::to_string(n));
    }
    for (int i = 0; i < n; ++i) {
      if (x[i] <= 0.0) continue;
      std::set<std::string> seen;
      for (const State* h : histories) {
        Accumulate(*h, owner, portfolio.at(i), x[i], 1.0, &seen, &acc);
      }
    }
  }
  for (auto& [key, entry] : acc) {
    std::vector<double> probs(entry.num.size(), 1.0 / entry.num.size());
    if (entry.den > 0.0) {
      for (size_t a = 0; a < probs.size(); ++a) {
        probs[a] = entry.num[a] / entry.den;
      }
    }
    out.Set(key, std::move(entry.labels), std::move(probs));
  }
  return out;
}

}  // namespace abd
