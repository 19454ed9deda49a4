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


#ifndef ABD_ROBUST_RBADAPT_H_
#define ABD_ROBUST_RBADAPT_H_

#include <memory>
#include <string>

#include "abd/efg/game.h"
#include "abd/efg/policy.h"

namespace abd {

struct RobustSpec {
  double p = 0.5;
  PolicyPtr fixed_opponent;
};

void ValidateRobustSpec(const RobustSpec& spec);

// Branch tags prefixed to P2's infoset keys.
inline constexpr char kFixedTag[] = "F|";
inline constexpr char kFreeTag[] = "R|";

// Root chance picks the fixed copy (probability p) or the free copy. Only P2
// observes the outcome. In the fixed copy P2's decisions are chance nodes
// following the fixed opponent. P1's keys are the base game's keys, so its
// infosets span both copies.
class RbAdaptGame : public Game,
                    public std::enable_shared_from_this<RbAdaptGame> {
 public:
  RbAdaptGame(GamePtr base, RobustSpec spec);

  std::unique_ptr<State> NewRoot() const override;
  std::string Id() const override;
  double MinUtility() const override { return base_->MinUtility(); }
  double MaxUtility() const override { return base_->MaxUtility(); }

  const Game& base() const { return *base_; }
  const GamePtr& base_ptr() const { return base_; }
  const RobustSpec& spec() const { return spec_; }

 private:
  GamePtr base_;
  RobustSpec spec_;
};

class RbAdaptState : public State {
 public:
  enum Branch { kRoot = -1, kFixed = 0, kFree = 1 };

  RbAdaptState(std::shared_ptr<const RbAdaptGame> game);
  RbAdaptState(const RbAdaptState& other);

  PlayerRole Role() const override;
  int NumActions() const override;
  std::string ActionLabel(int action) const override;
  void ApplyAction(int action) override;
  std::unique_ptr<State> Clone() const override {
    return std::make_unique<RbAdaptState>(*this);
  }
  std::vector<double> ChanceProbs() const override;
  double UtilityP1() const override { return base_->UtilityP1(); }
  std::string InfosetKey(Player player) const override;
  std::string PublicKey() const override;
  std::string HistoryKey() const override;

  const State& Base() const override { return base_->Base(); }
  std::optional<Player> Mover() const override;
  bool FixedOpponent() const override { return branch_ == kFixed; }
  Branch branch() const { return branch_; }

 private:
  std::shared_ptr<const RbAdaptGame> game_;
  Branch branch_ = kRoot;
  std::unique_ptr<State> base_;
};

std::shared_ptr<const RbAdaptGame> MakeRbAdapt(GamePtr base, RobustSpec spec);

}  // namespace abd

#endif  // ABD_ROBUST_RBADAPT_H_
