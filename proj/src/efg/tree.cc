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

#include "abd/efg/tree.h"

#include <memory>
#include <utility>

namespace abd {

GameTree GameTree::Build(const State& root) {
  Options options;
  options.node_cap = NodeCap();
  return Build(root, options);
}

GameTree GameTree::Build(const State& root, const Options& options) {
  GameTree tree;
  struct Item {
    int64_t index;
    std::unique_ptr<State> state;
  };
  tree.nodes_.emplace_back();
  tree.chance_prob_.push_back(1.0);
  tree.action_.push_back(-1);
  std::vector<Item> stack;
  stack.push_back({0, root.Clone()});
  std::vector<int> kept;
  std::vector<double> kept_probs;
  while (!stack.empty()) {
    Item item = std::move(stack.back());
    stack.pop_back();
    const State& s = *item.state;
    PlayerRole role = s.Role();
    tree.nodes_[item.index].role = role;
    if (role == PlayerRole::kTerminal) {
      tree.nodes_[item.index].value = s.UtilityP1();
      continue;
    }
    kept.clear();
    kept_probs.clear();
    int n = s.NumActions();
    if (n <= 0) {
      throw AbdError("non-terminal history '" + s.HistoryKey() +
                     "' has no actions");
    }
    if (role == PlayerRole::kChance) {
      std::vector<double> probs = s.ChanceProbs();
      ValidateDistribution(probs, n, "chance node '" + s.HistoryKey() + "'");
      for (int a = 0; a < n; ++a) {
        if (options.prune_zero_chance && probs[a] <= 0.0) continue;
        kept.push_back(a);
        kept_probs.push_back(probs[a]);
      }
    } else {
      Player p = *PlayerOf(role);
      int pi = PlayerIndex(p);
      std::string key = s.InfosetKey(p);
      auto [it, inserted] = tree.infoset_index_[pi].emplace(
          key, static_cast<int>(tree.infosets_[pi].size()));
      if (inserted) {
        Infoset info;
        info.key = std::move(key);
        info.labels = s.ActionLabels();
        info.offset = tree.strategy_size_[pi];
        tree.strategy_size_[pi] += n;
        tree.infosets_[pi].push_back(std::move(info));
      } else if (tree.infosets_[pi][it->second].num_actions() != n) {
        throw AbdError("histories of infoset hex " + HexEncode(it->first) +
                       " disagree on the number of legal actions");
      }
      tree.nodes_[item.index].infoset = it->second;
      for (int a = 0; a < n; ++a) {
        kept.push_back(a);
        kept_probs.push_back(1.0);
      }
    }
    int64_t first = tree.num_nodes();
    int k = static_cast<int>(kept.size());
    if (first + k > options.node_cap) {
      throw NodeCapExceeded(first + k, options.node_cap);
    }
    tree.nodes_[item.index].first_child = static_cast<int32_t>(first);
    tree.nodes_[item.index].num_children = k;
    for (int j = 0; j < k; ++j) {
      tree.nodes_.emplace_back();
      tree.chance_prob_.push_back(kept_probs[j]);
      tree.action_.push_back(kept[j]);
    }
    for (int j = k - 1; j >= 0; --j) {
      stack.push_back({first + j, s.Child(kept[j])});
    }
  }
  return tree;
}

int GameTree::FindInfoset(Player p, const std::string& key) const {
  const auto& index = infoset_index_[PlayerIndex(p)];
  auto it = index.find(key);
  return it == index.end() ? -1 : it->second;
}

std::vector<double> GameTree::UniformStrategy(Player p) const {
  std::vector<double> flat(strategy_size(p));
  for (const Infoset& info : infosets_[PlayerIndex(p)]) {
    for (int a = 0; a < info.num_actions(); ++a) {
      flat[info.offset + a] = 1.0 / info.num_actions();
    }
  }
  return flat;
}

std::vector<double> GameTree::StrategyFrom(Player p,
                                           const TabularPolicy& policy) const {
  std::vector<double> flat(strategy_size(p));
  for (const Infoset& info : infosets_[PlayerIndex(p)]) {
    const TabularPolicy::Entry* entry = policy.Find(info.key);
    if (entry == nullptr) {
      if (policy.missing() == TabularPolicy::Missing::kError) {
        throw MissingInfosetError(info.key);
      }
      for (int a = 0; a < info.num_actions(); ++a) {
        flat[info.offset + a] = 1.0 / info.num_actions();
      }
      continue;
    }
    if (static_cast<int>(entry->probs.size()) != info.num_actions()) {
      throw AbdError("strategy entry for infoset hex " + HexEncode(info.key) +
                     " has the wrong number of actions");
    }
    for (int a = 0; a < info.num_actions(); ++a) {
      flat[info.offset + a] = entry->probs[a];
    }
  }
  return flat;
}

TabularPolicy GameTree::ToPolicy(Player p, const std::vector<double>& flat,
                                 const std::string& name) const {
  TabularPolicy policy(name);
  for (const Infoset& info : infosets_[PlayerIndex(p)]) {
    std::vector<double> probs(flat.begin() + info.offset,
                              flat.begin() + info.offset + info.num_actions());
    policy.Set(info.key, info.labels, std::move(probs));
  }
  return policy;
}

namespace {

double ExpectedValueRec(const GameTree& tree, int64_t i,
                        const std::vector<double>& s1,
                        const std::vector<double>& s2) {
  const GameTree::Node& n = tree.node(i);
  switch (n.role) {
    case PlayerRole::kTerminal:
      return n.value;
    case PlayerRole::kChance: {
      double v = 0.0;
      for (int j = 0; j < n.num_children; ++j) {
        int64_t c = n.first_child + j;
        v += tree.chance_prob(c) * ExpectedValueRec(tree, c, s1, s2);
      }
      return v;
    }
    default: {
      Player p = *PlayerOf(n.role);
      const std::vector<double>& s = p == Player::kP1 ? s1 : s2;
      int offset = tree.infoset(p, n.infoset).offset;
      double v = 0.0;
      for (int j = 0; j < n.num_children; ++j) {
        int64_t c = n.first_child + j;
        double q = s[offset + tree.action_from_parent(c)];
        if (q > 0.0) v += q * ExpectedValueRec(tree, c, s1, s2);
      }
      return v;
    }
  }
}

// Action values closer than this count as ties.
constexpr double kTieTolerance = 1e-12;

struct TreeBrWork {
  const GameTree* tree;
  Player responder;
  const std::vector<double>* opponent;
  std::vector<double> seq_value;
  std::vector<int> parent_seq;
  std::vector<char> seen;
  double root_value = 0.0;

  void Add(int seq, double v) {
    if (seq < 0) {
      root_value += v;
    } else {
      seq_value[seq] += v;
    }
  }

  void Visit(int64_t i, double w, int seq) {
    const GameTree::Node& n = tree->node(i);
    if (n.role == PlayerRole::kTerminal) {
      Add(seq, w * UtilityFor(responder, n.value));
      return;
    }
    if (n.role == PlayerRole::kChance) {
      for (int j = 0; j < n.num_children; ++j) {
        int64_t c = n.first_child + j;
        double q = w * tree->chance_prob(c);
        if (q > 0.0) Visit(c, q, seq);
      }
      return;
    }
    Player p = *PlayerOf(n.role);
    const GameTree::Infoset& info = tree->infoset(p, n.infoset);
    if (p == responder) {
      if (!seen[n.infoset]) {
        seen[n.infoset] = 1;
        parent_seq[n.infoset] = seq;
      }
      for (int j = 0; j < n.num_children; ++j) {
        int64_t c = n.first_child + j;
        Visit(c, w, info.offset + tree->action_from_parent(c));
      }
      return;
    }
    for (int j = 0; j < n.num_children; ++j) {
      int64_t c = n.first_child + j;
      double q = w * (*opponent)[info.offset + tree->action_from_parent(c)];
      if (q > 0.0) Visit(c, q, seq);
    }
  }
};

}  // namespace

double TreeExpectedValue(const GameTree& tree, const std::vector<double>& s1,
                         const std::vector<double>& s2) {
  return ExpectedValueRec(tree, 0, s1, s2);
}

TreeBestResponse ComputeTreeBestResponse(const GameTree& tree,
                                         Player responder,
                                         const std::vector<double>& opponent) {
  TreeBrWork work;
  work.tree = &tree;
  work.responder = responder;
  work.opponent = &opponent;
  int num = tree.num_infosets(responder);
  work.seq_value.assign(tree.strategy_size(responder), 0.0);
  work.parent_seq.assign(num, -1);
  work.seen.assign(num, 0);
  work.Visit(0, 1.0, -1);

  TreeBestResponse result;
  result.best_action.assign(num, 0);
  for (int id = num - 1; id >= 0; --id) {
    if (!work.seen[id]) continue;
    const GameTree::Infoset& info = tree.infoset(responder, id);
    int best = 0;
    double best_value = work.seq_value[info.offset];
    for (int a = 1; a < info.num_actions(); ++a) {
      if (work.seq_value[info.offset + a] > best_value + kTieTolerance) {
        best = a;
        best_value = work.seq_value[info.offset + a];
      }
    }
    result.best_action[id] = best;
    work.Add(work.parent_seq[id], best_value);
  }
  result.value = work.root_value;
  return result;
}

}  // namespace abd
