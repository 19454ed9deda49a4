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

#ifndef ABD_GAMES_BATTLESHIPS_H_
#define ABD_GAMES_BATTLESHIPS_H_

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "abd/efg/game.h"

namespace abd {

struct ShipShape {
  int w = 1;
  int h = 1;
};

struct BattleshipsConfig {
  int width = 2;
  int height = 2;
  std::vector<ShipShape> ships = {{1, 1}};
  Player first_shooter = Player::kP1;
};

// Parses "2x1,1x1".
std::vector<ShipShape> ParseShips(const std::string& text);
std::string ShipsToString(const std::vector<ShipShape>& ships);

inline constexpr int kMaxBoardCells = 64;
inline constexpr int kMaxShips = 8;

// Both players secretly place every ship (P1 first, one decision per ship,
// ships may touch but not overlap), then shoot alternately at the opposing
// board starting with the first shooter. Each shot's hit/miss outcome is
// public. The player who first hits every opposing ship cell wins (+1).
// Cells are numbered row-major, cell 0 is the top-left corner.
class BattleshipsGame : public Game,
                        public std::enable_shared_from_this<BattleshipsGame> {
 public:
  struct Placement {
    uint64_t mask;
    std::string label;
  };

  // Use MakeBattleships(); states keep the game alive through shared_from_this.
  explicit BattleshipsGame(BattleshipsConfig config);

  std::unique_ptr<State> NewRoot() const override;
  std::string Id() const override;
  double MinUtility() const override { return -1.0; }
  double MaxUtility() const override { return 1.0; }

  const BattleshipsConfig& config() const { return config_; }
  int num_cells() const { return config_.width * config_.height; }
  int num_ships() const { return static_cast<int>(config_.ships.size()); }
  uint64_t board_mask() const { return board_mask_; }
  // Cells whose coordinates sum to an even number.
  uint64_t even_mask() const { return even_mask_; }
  int ship_cells() const { return ship_cells_; }
  const std::vector<Placement>& candidates(int ship) const {
    return candidates_[ship];
  }
  // Whether ships ship..end can still be placed given occupied cells.
  bool Completable(int ship, uint64_t occupied) const;
  std::string CellLabel(int cell) const;

 private:
  BattleshipsConfig config_;
  uint64_t board_mask_ = 0;
  uint64_t even_mask_ = 0;
  int ship_cells_ = 0;
  std::vector<std::vector<Placement>> candidates_;
};

class BattleshipsState : public State {
 public:
  explicit BattleshipsState(std::shared_ptr<const BattleshipsGame> game);

  PlayerRole Role() const override;
  int NumActions() const override;
  std::string ActionLabel(int action) const override;
  void ApplyAction(int action) override;
  std::unique_ptr<State> Clone() const override {
    return std::make_unique<BattleshipsState>(*this);
  }
  double UtilityP1() const override;
  std::string InfosetKey(Player player) const override;
  std::string PublicKey() const override;
  std::string HistoryKey() const override { return history_; }

  const BattleshipsGame& game() const { return *game_; }
  bool InPlacement() const { return moves_ < 2 * game_->num_ships(); }
  // Cells already shot by `shooter` on the opposing board.
  uint64_t shot_mask(Player shooter) const {
    return shots_[PlayerIndex(shooter)];
  }
  uint64_t ship_mask(Player owner) const {
    return ships_[PlayerIndex(owner)];
  }
  // Legal shots of the acting shooter as a cell mask.
  uint64_t LegalShotMask() const;
  // Cell targeted by shot action `action`.
  int ShotCell(int action) const;
  // Action index of shooting at `cell`; -1 if not legal.
  int ShotAction(int cell) const;
  // Placement candidate ids legal at the current placement decision.
  const std::vector<uint16_t>& legal_placements() const {
    return legal_placements_;
  }
  int current_ship() const;

 private:
  void RefreshPlacements();

  std::shared_ptr<const BattleshipsGame> game_;
  int moves_ = 0;
  uint64_t ships_[2] = {0, 0};
  uint64_t shots_[2] = {0, 0};
  int hits_[2] = {0, 0};
  int winner_ = -1;
  std::string placements_[2];  // Own placement ids as bytes.
  std::string public_;         // (cell, outcome) byte pairs.
  std::string history_;        // Action indices as bytes.
  std::vector<uint16_t> legal_placements_;
};

std::shared_ptr<const BattleshipsGame> MakeBattleships(
    const BattleshipsConfig& config);

}  // namespace abd

#endif  // ABD_GAMES_BATTLESHIPS_H_
