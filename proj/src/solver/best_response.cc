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


#include "abd/solver/best_response.h"

#include <utility>

namespace abd {
namespace {

constexpr double kTieTolerance = 1e-12;

struct InfosetData {
  std::string key;
  std::vector<std::string> labels;
  std::vector<double> q;  // Accumulated sequence values.
  int parent = -1;        // Responder infoset above, or -1.
  int parent_action = -1;
};

class BrWork {
 public:
  BrWork(Player responder, const Policy& opponent, int64_t node_cap)
      : responder_(responder), opponent_(opponent), node_cap_(node_cap) {}

  void Visit(const State& s, double weight, int parent, int parent_action) {
    if (++nodes_ > node_cap_) throw NodeCapExceeded(nodes_, node_cap_);
    PlayerRole role = s.Role();
    if (role == PlayerRole::kTerminal) {
      Add(parent, parent_action, weight * UtilityFor(responder_, s.UtilityP1()));
      return;
    }
    if (role == PlayerRole::kChance) {
      std::vector<double> probs = s.ChanceProbs();
      for (int a = 0; a < static_cast<int>(probs.size()); ++a) {
        if (probs[a] > 0.0) {
          Visit(*s.Child(a), weight * probs[a], parent, parent_action);
        }
      }
      return;
    }
    Player actor = *PlayerOf(role);
    if (actor != responder_) {
      std::vector<double> probs = opponent_.ActionProbs(s);
      if (static_cast<int>(probs.size()) != s.NumActions()) {
        throw AbdError("opponent policy '" + opponent_.Name() +
                       "' returned a distribution of the wrong size");
      }
      for (int a = 0; a < static_cast<int>(probs.size()); ++a) {
        if (probs[a] > 0.0) {
          Visit(*s.Child(a), weight * probs[a], parent, parent_action);
        }
      }
      return;
    }
    std::string key = s.InfosetKey(responder_);
    auto [it, inserted] =
        index_.emplace(key, static_cast<int>(infosets_.size()));
    int id = it->second;
    if (inserted) {
      InfosetData data;
      data.key = std::move(key);
      data.labels = s.ActionLabels();
      data.q.assign(data.labels.size(), 0.0);
      data.parent = parent;
      data.parent_action = parent_action;
      infosets_.push_back(std::move(data));
    }
    for (int a = 0; a < s.NumActions(); ++a) {
      Visit(*s.Child(a), weight, id, a);
    }
  }

  BestResponseResult Finish(const Policy& opponent) {
    BestResponseResult result;
    result.policy = TabularPolicy("br_to_" + opponent.Name());
    for (int id = static_cast<int>(infosets_.size()) - 1; id >= 0; --id) {
      InfosetData& info = infosets_[id];
      int best = 0;
      for (int a = 1; a < static_cast<int>(info.q.size()); ++a) {
        if (info.q[a] > info.q[best] + kTieTolerance) best = a;
      }
      Add(info.parent, info.parent_action, info.q[best]);
      std::vector<double> probs(info.q.size(), 0.0);
      probs[best] = 1.0;
      result.policy.Set(info.key, info.labels, std::move(probs));
    }
    for (InfosetData& info : infosets_) {
      result.action_values.emplace(info.key, std::move(info.q));
    }
    result.value = root_value_;
    result.nodes_visited = nodes_;
    return result;
  }

 private:
  void Add(int parent, int action, double v) {
    if (parent < 0) {
      root_value_ += v;
    } else {
      infosets_[parent].q[action] += v;
    }
  }

  Player responder_;
  const Policy& opponent_;
  int64_t node_cap_;
  int64_t nodes_ = 0;
  double root_value_ = 0.0;
  std::vector<InfosetData> infosets_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace

BestResponseResult BestResponse(const State& root, Player responder,
                                const Policy& opponent, int64_t node_cap) {
  BrWork work(responder, opponent, node_cap);
  work.Visit(root, 1.0, -1, -1);
  return work.Finish(opponent);
}

BestResponseResult BestResponse(const Game& game, Player responder,
                                const Policy& opponent, int64_t node_cap) {
  return BestResponse(*game.NewRoot(), responder, opponent, node_cap);
}

}  // namespace abd
