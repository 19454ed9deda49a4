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

#ifndef ABD_EFG_GAME_H_
#define ABD_EFG_GAME_H_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "abd/efg/types.h"

namespace abd {

// A history of a two-player zero-sum extensive-form game. States are mutable
// cursors; Clone() gives an independent copy. Actions are indices
// 0..NumActions()-1 into the legal-action list of the current history.
//
// Keys are canonical byte strings. InfosetKey(p) is defined at every history,
// not only where p acts: it encodes everything p has observed so far. Equal
// infoset keys of either player imply equal public keys.
class State {
 public:
  virtual ~State() = default;

  virtual PlayerRole Role() const = 0;
  virtual int NumActions() const = 0;
  virtual std::string ActionLabel(int action) const = 0;
  virtual void ApplyAction(int action) = 0;
  virtual std::unique_ptr<State> Clone() const = 0;

  // Distribution over actions; only valid when Role() is kChance.
  virtual std::vector<double> ChanceProbs() const;
  // Only valid at terminals.
  virtual double UtilityP1() const = 0;

  virtual std::string InfosetKey(Player player) const = 0;
  virtual std::string PublicKey() const = 0;
  // Unique, stable identifier of the history (used for seeding and caching).
  virtual std::string HistoryKey() const = 0;

  bool IsTerminal() const { return Role() == PlayerRole::kTerminal; }
  bool IsChance() const { return Role() == PlayerRole::kChance; }
  std::optional<Player> ActingPlayer() const { return PlayerOf(Role()); }
  std::string ActingInfosetKey() const;
  std::vector<std::string> ActionLabels() const;
  std::unique_ptr<State> Child(int action) const;

  // Hooks used when games are composed from other games. A composed state
  // forwards Base() to the underlying base-game history, so that base-game
  // strategies can be queried anywhere.
  virtual const State& Base() const { return *this; }
  // Player whose decision this node represents, even when it has been turned
  // into a chance node by a composition.
  virtual std::optional<Player> Mover() const { return ActingPlayer(); }
  // False on the replicated trunk of a re-solving gadget.
  virtual bool InSubgame() const { return true; }
  // True at the first history of a trajectory that left the played path.
  virtual bool OffPath() const { return false; }
  // True inside the branch where P2 follows the fixed model.
  virtual bool FixedOpponent() const { return false; }
};

class Game {
 public:
  virtual ~Game() = default;
  virtual std::unique_ptr<State> NewRoot() const = 0;
  // Stable identifier, also written into strategy files.
  virtual std::string Id() const = 0;
  virtual double MinUtility() const = 0;
  virtual double MaxUtility() const = 0;
};

using GamePtr = std::shared_ptr<const Game>;

// Game with a single terminal history.
class SingleTerminalGame : public Game {
 public:
  explicit SingleTerminalGame(double utility) : utility_(utility) {}
  std::unique_ptr<State> NewRoot() const override;
  std::string Id() const override;
  double MinUtility() const override { return utility_; }
  double MaxUtility() const override { return utility_; }

 private:
  double utility_;
};

// Applies a sequence of action indices from the root.
std::unique_ptr<State> StateFromActions(const Game& game,
                                        const std::vector<int>& actions);

// Zero-padded decimal prefix used by the built-in games so that keys of
// shallower histories sort first.
std::string DepthPrefix(int depth);

}  // namespace abd

#endif  // ABD_EFG_GAME_H_
