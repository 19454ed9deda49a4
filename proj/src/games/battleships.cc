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

#include "abd/games/battleships.h"

#include <bit>
#include <cstdlib>
#include <set>
#include <sstream>

namespace abd {

std::vector<ShipShape> ParseShips(const std::string& text) {
  std::vector<ShipShape> ships;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t start = item.find_first_not_of(" \t");
    size_t end = item.find_last_not_of(" \t");
    if (start == std::string::npos) {
      throw InvalidArgument("empty ship shape in '" + text + "'");
    }
    item = item.substr(start, end - start + 1);
    size_t x = item.find('x');
    char* stop = nullptr;
    ShipShape ship;
    if (x == std::string::npos) {
      throw InvalidArgument("ship shape '" + item + "' is not WxH");
    }
    std::string w = item.substr(0, x);
    std::string h = item.substr(x + 1);
    ship.w = static_cast<int>(std::strtol(w.c_str(), &stop, 10));
    if (w.empty() || *stop != '\0') {
      throw InvalidArgument("ship shape '" + item + "' is not WxH");
    }
    ship.h = static_cast<int>(std::strtol(h.c_str(), &stop, 10));
    if (h.empty() || *stop != '\0') {
      throw InvalidArgument("ship shape '" + item + "' is not WxH");
    }
    if (ship.w <= 0 || ship.h <= 0) {
      throw InvalidArgument("ship shape '" + item + "' must be positive");
    }
    ships.push_back(ship);
  }
  if (ships.empty()) throw InvalidArgument("no ships in '" + text + "'");
  return ships;
}

std::string ShipsToString(const std::vector<ShipShape>& ships) {
  std::string out;
  for (size_t i = 0; i < ships.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(ships[i].w) + "x" + std::to_string(ships[i].h);
  }
  return out;
}

BattleshipsGame::BattleshipsGame(BattleshipsConfig config)
    : config_(std::move(config)) {
  const int w = config_.width;
  const int h = config_.height;
  if (w <= 0 || h <= 0) throw InvalidArgument("board must be nonempty");
  if (w * h > kMaxBoardCells) {
    throw InvalidArgument("board has " + std::to_string(w * h) +
                          " cells; at most " + std::to_string(kMaxBoardCells) +
                          " are supported");
  }
  if (config_.ships.empty()) throw InvalidArgument("at least one ship needed");
  if (static_cast<int>(config_.ships.size()) > kMaxShips) {
    throw InvalidArgument("at most " + std::to_string(kMaxShips) +
                          " ships are supported");
  }
  board_mask_ = (w * h == 64) ? ~uint64_t{0} : ((uint64_t{1} << (w * h)) - 1);
  for (int cell = 0; cell < w * h; ++cell) {
    if ((cell % w + cell / w) % 2 == 0) even_mask_ |= uint64_t{1} << cell;
  }
  for (const ShipShape& ship : config_.ships) {
    ship_cells_ += ship.w * ship.h;
    std::vector<Placement> list;
    std::set<uint64_t> seen;
    for (int rot = 0; rot < 2; ++rot) {
      int sw = rot == 0 ? ship.w : ship.h;
      int sh = rot == 0 ? ship.h : ship.w;
      for (int y = 0; y + sh <= h; ++y) {
        for (int x = 0; x + sw <= w; ++x) {
          uint64_t mask = 0;
          for (int dy = 0; dy < sh; ++dy) {
            for (int dx = 0; dx < sw; ++dx) {
              mask |= uint64_t{1} << ((y + dy) * w + (x + dx));
            }
          }
          if (!seen.insert(mask).second) continue;
          std::string label = "at_" + CellLabel(y * w + x);
          if (ship.w != ship.h) label += rot == 0 ? "h" : "v";
          list.push_back({mask, label});
        }
      }
    }
    if (list.empty()) {
      throw InvalidArgument("ship " + std::to_string(ship.w) + "x" +
                            std::to_string(ship.h) + " does not fit on a " +
                            std::to_string(w) + "x" + std::to_string(h) +
                            " board");
    }
    candidates_.push_back(std::move(list));
  }
  if (!Completable(0, 0)) {
    throw InvalidArgument("ships " + ShipsToString(config_.ships) +
                          " cannot be placed without overlap");
  }
}

bool BattleshipsGame::Completable(int ship, uint64_t occupied) const {
  if (ship >= num_ships()) return true;
  for (const Placement& p : candidates_[ship]) {
    if ((p.mask & occupied) == 0 && Completable(ship + 1, occupied | p.mask)) {
      return true;
    }
  }
  return false;
}

std::string BattleshipsGame::CellLabel(int cell) const {
  return "x" + std::to_string(cell % config_.width) + "y" +
         std::to_string(cell / config_.width);
}

std::string BattleshipsGame::Id() const {
  std::string ships;
  for (size_t i = 0; i < config_.ships.size(); ++i) {
    if (i > 0) ships += "+";
    ships += std::to_string(config_.ships[i].w) + "x" +
             std::to_string(config_.ships[i].h);
  }
  return "battleships_" + std::to_string(config_.width) + "x" +
         std::to_string(config_.height) + "_s" + ships + "_" +
         (config_.first_shooter == Player::kP1 ? "p1" : "p2");
}

std::unique_ptr<State> BattleshipsGame::NewRoot() const {
  return std::make_unique<BattleshipsState>(shared_from_this());
}

std::shared_ptr<const BattleshipsGame> MakeBattleships(
    const BattleshipsConfig& config) {
  return std::make_shared<BattleshipsGame>(config);
}

BattleshipsState::BattleshipsState(
    std::shared_ptr<const BattleshipsGame> game)
    : game_(std::move(game)) {
  RefreshPlacements();
}

int BattleshipsState::current_ship() const {
  return moves_ % game_->num_ships();
}

PlayerRole BattleshipsState::Role() const {
  if (winner_ >= 0) return PlayerRole::kTerminal;
  const int n = game_->num_ships();
  if (moves_ < n) return PlayerRole::kP1;
  if (moves_ < 2 * n) return PlayerRole::kP2;
  int shot = moves_ - 2 * n;
  Player first = game_->config().first_shooter;
  return RoleOf(shot % 2 == 0 ? first : Opponent(first));
}

int BattleshipsState::NumActions() const {
  if (winner_ >= 0) return 0;
  if (InPlacement()) return static_cast<int>(legal_placements_.size());
  return std::popcount(LegalShotMask());
}

uint64_t BattleshipsState::LegalShotMask() const {
  Player shooter = *PlayerOf(Role());
  return game_->board_mask() & ~shots_[PlayerIndex(shooter)];
}

int BattleshipsState::ShotCell(int action) const {
  uint64_t free = LegalShotMask();
  for (int i = 0; i < action; ++i) free &= free - 1;
  return std::countr_zero(free);
}

int BattleshipsState::ShotAction(int cell) const {
  uint64_t free = LegalShotMask();
  uint64_t bit = uint64_t{1} << cell;
  if ((free & bit) == 0) return -1;
  return std::popcount(free & (bit - 1));
}

std::string BattleshipsState::ActionLabel(int action) const {
  if (action < 0 || action >= NumActions()) {
    throw InvalidArgument("illegal Battleships action " +
                          std::to_string(action));
  }
  if (InPlacement()) {
    return game_->candidates(current_ship())[legal_placements_[action]].label;
  }
  return game_->CellLabel(ShotCell(action));
}

void BattleshipsState::ApplyAction(int action) {
  if (action < 0 || action >= NumActions()) {
    throw InvalidArgument("illegal Battleships action " +
                          std::to_string(action) + " at history of length " +
                          std::to_string(moves_));
  }
  if (InPlacement()) {
    int p = PlayerIndex(*PlayerOf(Role()));
    uint16_t id = legal_placements_[action];
    ships_[p] |= game_->candidates(current_ship())[id].mask;
    placements_[p].push_back(static_cast<char>(id));
  } else {
    int s = PlayerIndex(*PlayerOf(Role()));
    int cell = ShotCell(action);
    uint64_t bit = uint64_t{1} << cell;
    shots_[s] |= bit;
    bool hit = (ships_[1 - s] & bit) != 0;
    if (hit && ++hits_[s] == game_->ship_cells()) winner_ = s;
    public_.push_back(static_cast<char>(cell));
    public_.push_back(hit ? 'H' : 'm');
  }
  history_.push_back(static_cast<char>(action));
  ++moves_;
  RefreshPlacements();
}

void BattleshipsState::RefreshPlacements() {
  legal_placements_.clear();
  if (!InPlacement()) return;
  int p = moves_ < game_->num_ships() ? 0 : 1;
  int ship = current_ship();
  const auto& list = game_->candidates(ship);
  for (size_t id = 0; id < list.size(); ++id) {
    uint64_t mask = list[id].mask;
    if ((mask & ships_[p]) == 0 &&
        game_->Completable(ship + 1, ships_[p] | mask)) {
      legal_placements_.push_back(static_cast<uint16_t>(id));
    }
  }
}

double BattleshipsState::UtilityP1() const {
  if (winner_ < 0) throw AbdError("UtilityP1() at a non-terminal history");
  return winner_ == 0 ? 1.0 : -1.0;
}

std::string BattleshipsState::PublicKey() const {
  return DepthPrefix(moves_) + "|" + public_;
}

std::string BattleshipsState::InfosetKey(Player player) const {
  return PublicKey() + "|" + placements_[PlayerIndex(player)];
}

}  // namespace abd
