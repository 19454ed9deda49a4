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


#ifndef ABD_DEPTHLIMIT_DEPTH_LIMITED_GAME_H_
#define ABD_DEPTHLIMIT_DEPTH_LIMITED_GAME_H_

#include <memory>
#include <string>
#include <vector>

#include "abd/depthlimit/leaf_values.h"
#include "abd/efg/game.h"

namespace abd {

struct DepthSpec {
  int d = 1;  // Opponent moves inside the look-ahead.
};

enum class LeafMode {
  // Both players pick a portfolio entry and the leaf pays the matrix entry.
  kMatrix,
  // Where P2 follows the fixed model, nothing is cut: beyond the limit the
  // fixed opponent turns into a rational one with its own infosets, so the
  // leaves carry optimal values. Elsewhere histories are cut as in kMatrix
  // when a value table is given, and left uncut otherwise.
  kRational,
};

struct DepthLimitOptions {
  DepthSpec depth;
  LeafMode mode = LeafMode::kMatrix;
  // Gives P2 the fixed opponent as an extra column at free-branch leaves.
  bool fixed_column_in_free = false;
};

// Prefix of P2 keys beyond the limit in kRational mode.
inline constexpr char kRationalTag[] = "C|";
// Suffix of infoset and public keys at portfolio choices.
inline constexpr char kMvsTag[] = "#mvs";

// Wraps a game (the base game, a robust game or a gadget) and cuts it after
// P2's d-th move counted from where InSubgame() starts holding. Chance nodes
// that directly follow are expanded first. Histories marked OffPath() are
// cut on the spot. Leaf values come from the base history (State::Base()).
class DepthLimitedGame : public Game,
                         public std::enable_shared_from_this<DepthLimitedGame> {
 public:
  DepthLimitedGame(GamePtr inner, DepthLimitOptions options,
                   std::shared_ptr<LeafValueTable> values);

  std::unique_ptr<State> NewRoot() const override;
  std::string Id() const override;
  double MinUtility() const override { return inner_->MinUtility(); }
  double MaxUtility() const override { return inner_->MaxUtility(); }

  const Game& inner() const { return *inner_; }
  const DepthLimitOptions& options() const { return options_; }
  LeafValueTable* values() const { return values_.get(); }
  const std::vector<std::string>& p1_labels() const { return p1_labels_; }
  const std::vector<std::string>& p2_labels() const { return p2_labels_; }

 private:
  GamePtr inner_;
  DepthLimitOptions options_;
  std::shared_ptr<LeafValueTable> values_;
  std::vector<std::string> p1_labels_;
  std::vector<std::string> p2_labels_;
};

class DepthLimitedState : public State {
 public:
  enum class Phase { kInner, kP1Pick, kP2Pick, kLeafDone };

  DepthLimitedState(std::shared_ptr<const DepthLimitedGame> game,
                    std::unique_ptr<State> inner);
  DepthLimitedState(const DepthLimitedState& other);

  PlayerRole Role() const override;
  int NumActions() const override;
  std::string ActionLabel(int action) const override;
  void ApplyAction(int action) override;
  std::unique_ptr<State> Clone() const override {
    return std::make_unique<DepthLimitedState>(*this);
  }
  std::vector<double> ChanceProbs() const override;
  double UtilityP1() const override;
  std::string InfosetKey(Player player) const override;
  std::string PublicKey() const override;
  std::string HistoryKey() const override;

  const State& Base() const override { return inner_->Base(); }
  std::optional<Player> Mover() const override;
  bool InSubgame() const override { return inner_->InSubgame(); }
  bool OffPath() const override { return inner_->OffPath(); }
  bool FixedOpponent() const override { return inner_->FixedOpponent(); }

  Phase phase() const { return phase_; }
  const State& inner() const { return *inner_; }
  int opponent_moves() const { return p2_moves_; }
  // True at a leaf where P2 is the fixed opponent and does not pick.
  bool FixedLeaf() const { return fixed_leaf_; }

 private:
  void Settle();
  int NumP2Columns() const;

  std::shared_ptr<const DepthLimitedGame> game_;
  std::unique_ptr<State> inner_;
  Phase phase_ = Phase::kInner;
  int p2_moves_ = 0;
  bool rational_node_ = false;
  bool fixed_leaf_ = false;
  int pick1_ = -1;
  int pick2_ = -1;
};

std::shared_ptr<const DepthLimitedGame> MakeDepthLimited(
    GamePtr inner, DepthLimitOptions options,
    std::shared_ptr<LeafValueTable> values);

// Histories of `root`'s game where the depth limit cuts, in DFS order.
// Histories with zero chance probability are skipped.
std::vector<std::unique_ptr<State>> FrontierHistories(const State& root,
                                                      DepthSpec depth);

}  // namespace abd

#endif  // ABD_DEPTHLIMIT_DEPTH_LIMITED_GAME_H_
