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


#ifndef ABD_AGENT_GADGET_H_
#define ABD_AGENT_GADGET_H_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "abd/efg/game.h"
#include "abd/efg/policy.h"

namespace abd {

// What the agent has committed to so far in an episode.
struct TrunkRecord {
  // P1 behavior at every infoset resolved so far, keyed by base infoset key.
  TabularPolicy p1{"trunk", TabularPolicy::Missing::kUniform};
  // Public keys of the played trajectory; path[k] is the key after k
  // actions, so path.back() is the current public state.
  std::vector<std::string> path;
};

struct GadgetOptions {
  double p = 1.0;
  PolicyPtr fixed_opponent;
  // When set, the fixed branch only holds histories of this P1 infoset and
  // is weighted by opponent and chance reach only.
  std::optional<std::string> p1_infoset;
};

// A base history of the current public state with its fixed-branch weight
// (P1 trunk reach x fixed-opponent reach x chance reach).
struct WeightedHistory {
  std::shared_ptr<const State> history;
  double weight = 0.0;
};

// Histories consistent with `path` at depth path.size() - 1. Weights use
// `trunk` for P1 (or 1 when null) and `fixed` for P2.
std::vector<WeightedHistory> PublicStateHistories(
    const Game& base, const std::vector<std::string>& path,
    const Policy* trunk, const Policy& fixed);

// Re-solving game for the public state at the end of trunk.path. A root
// chance node picks the fixed branch (P2 plays the fixed model from a
// chance node over the public state's histories) or the free branch (a
// replica of the game from its root in which P1 follows the trunk until
// the public state is reached, P2 is free, and a history whose public key
// leaves the path is flagged OffPath()). Fixed-branch weights are
// normalized; the root probability of the fixed branch is rescaled by
// their total so that both branches keep their relative mass.
class GadgetGame : public Game,
                   public std::enable_shared_from_this<GadgetGame> {
 public:
  GadgetGame(GamePtr base, TrunkRecord trunk, GadgetOptions options);

  std::unique_ptr<State> NewRoot() const override;
  std::string Id() const override;
  double MinUtility() const override { return base_->MinUtility(); }
  double MaxUtility() const override { return base_->MaxUtility(); }

  const Game& base() const { return *base_; }
  const TrunkRecord& trunk() const { return trunk_; }
  const GadgetOptions& options() const { return options_; }
  // Every history of the current public state.
  const std::vector<WeightedHistory>& public_state() const {
    return public_state_;
  }
  // Histories of the fixed branch (a subset of public_state()).
  const std::vector<WeightedHistory>& fixed_histories() const {
    return fixed_;
  }
  const std::vector<double>& fixed_probs() const { return fixed_probs_; }
  double fixed_mass() const { return fixed_mass_; }
  bool uniform_fallback() const { return uniform_fallback_; }
  // Root chance over the branches that have positive probability.
  const std::vector<int>& branches() const { return branches_; }
  const std::vector<double>& branch_probs() const { return branch_probs_; }
  int subgame_depth() const { return static_cast<int>(trunk_.path.size()) - 1; }

 private:
  GamePtr base_;
  TrunkRecord trunk_;
  GadgetOptions options_;
  std::vector<WeightedHistory> public_state_;
  std::vector<WeightedHistory> fixed_;
  std::vector<double> fixed_probs_;
  double fixed_mass_ = 0.0;
  bool uniform_fallback_ = false;
  std::vector<int> branches_;
  std::vector<double> branch_probs_;
};

class GadgetState : public State {
 public:
  enum Stage { kRoot, kFixedStart, kFixed, kFree };

  explicit GadgetState(std::shared_ptr<const GadgetGame> game);
  GadgetState(const GadgetState& other);

  PlayerRole Role() const override;
  int NumActions() const override;
  std::string ActionLabel(int action) const override;
  void ApplyAction(int action) override;
  std::unique_ptr<State> Clone() const override {
    return std::make_unique<GadgetState>(*this);
  }
  std::vector<double> ChanceProbs() const override;
  double UtilityP1() const override { return base_->UtilityP1(); }
  std::string InfosetKey(Player player) const override;
  std::string PublicKey() const override;
  std::string HistoryKey() const override;

  const State& Base() const override { return base_->Base(); }
  std::optional<Player> Mover() const override;
  bool InSubgame() const override;
  bool OffPath() const override { return off_path_; }
  bool FixedOpponent() const override {
    return stage_ == kFixed || stage_ == kFixedStart;
  }

  Stage stage() const { return stage_; }

 private:
  bool TrunkP1Node() const;
  void Track();

  std::shared_ptr<const GadgetGame> game_;
  Stage stage_ = kRoot;
  std::unique_ptr<State> base_;
  int depth_ = 0;
  bool in_subgame_ = false;
  bool off_path_ = false;
  bool left_path_ = false;
};

std::shared_ptr<const GadgetGame> MakeGadget(GamePtr base, TrunkRecord trunk,
                                             GadgetOptions options);

}  // namespace abd

#endif  // ABD_AGENT_GADGET_H_
