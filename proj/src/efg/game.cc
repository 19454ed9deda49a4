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

#include "abd/efg/game.h"

#include <cstdio>

namespace abd {

std::vector<double> State::ChanceProbs() const {
  throw AbdError("ChanceProbs() called at a " + RoleName(Role()) + " node");
}

std::string State::ActingInfosetKey() const {
  auto player = ActingPlayer();
  if (!player) {
    throw AbdError("ActingInfosetKey() called at a " + RoleName(Role()) +
                   " node");
  }
  return InfosetKey(*player);
}

std::vector<std::string> State::ActionLabels() const {
  std::vector<std::string> labels;
  labels.reserve(NumActions());
  for (int a = 0; a < NumActions(); ++a) labels.push_back(ActionLabel(a));
  return labels;
}

std::unique_ptr<State> State::Child(int action) const {
  auto child = Clone();
  child->ApplyAction(action);
  return child;
}

namespace {

class SingleTerminalState : public State {
 public:
  explicit SingleTerminalState(double utility) : utility_(utility) {}
  PlayerRole Role() const override { return PlayerRole::kTerminal; }
  int NumActions() const override { return 0; }
  std::string ActionLabel(int) const override {
    throw AbdError("terminal history has no actions");
  }
  void ApplyAction(int) override {
    throw AbdError("cannot act at a terminal history");
  }
  std::unique_ptr<State> Clone() const override {
    return std::make_unique<SingleTerminalState>(*this);
  }
  double UtilityP1() const override { return utility_; }
  std::string InfosetKey(Player) const override { return DepthPrefix(0); }
  std::string PublicKey() const override { return DepthPrefix(0); }
  std::string HistoryKey() const override { return ""; }

 private:
  double utility_;
};

}  // namespace

std::unique_ptr<State> SingleTerminalGame::NewRoot() const {
  return std::make_unique<SingleTerminalState>(utility_);
}

std::string SingleTerminalGame::Id() const {
  return "single_terminal(" + FormatProb(utility_) + ")";
}

std::unique_ptr<State> StateFromActions(const Game& game,
                                        const std::vector<int>& actions) {
  auto state = game.NewRoot();
  for (int a : actions) {
    if (a < 0 || a >= state->NumActions()) {
      throw InvalidArgument("action " + std::to_string(a) +
                            " is not legal at history '" +
                            state->HistoryKey() + "'");
    }
    state->ApplyAction(a);
  }
  return state;
}

std::string DepthPrefix(int depth) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%03d", depth);
  return buf;
}

}  // namespace abd
