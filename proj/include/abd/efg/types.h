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

#ifndef ABD_EFG_TYPES_H_
#define ABD_EFG_TYPES_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace abd {

enum class Player : int { kP1 = 0, kP2 = 1 };

enum class PlayerRole { kP1, kP2, kChance, kTerminal };

inline constexpr double kProbTolerance = 1e-9;

inline Player Opponent(Player p) {
  return p == Player::kP1 ? Player::kP2 : Player::kP1;
}

inline int PlayerIndex(Player p) { return static_cast<int>(p); }

inline PlayerRole RoleOf(Player p) {
  return p == Player::kP1 ? PlayerRole::kP1 : PlayerRole::kP2;
}

inline std::optional<Player> PlayerOf(PlayerRole role) {
  if (role == PlayerRole::kP1) return Player::kP1;
  if (role == PlayerRole::kP2) return Player::kP2;
  return std::nullopt;
}

// Utility of `p` given P1's utility.
inline double UtilityFor(Player p, double utility_p1) {
  return p == Player::kP1 ? utility_p1 : -utility_p1;
}

std::string PlayerName(Player p);
std::string RoleName(PlayerRole role);

// Base class of every error raised by the library.
class AbdError : public std::runtime_error {
 public:
  explicit AbdError(const std::string& what) : std::runtime_error(what) {}
};

class InvalidArgument : public AbdError {
 public:
  explicit InvalidArgument(const std::string& what) : AbdError(what) {}
};

// A strategy was queried at an infoset it does not cover.
class MissingInfosetError : public AbdError {
 public:
  explicit MissingInfosetError(std::string key);
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

// Explicit enumeration exceeded the configured node cap.
class NodeCapExceeded : public AbdError {
 public:
  NodeCapExceeded(int64_t count, int64_t cap);
  int64_t count() const { return count_; }
  int64_t cap() const { return cap_; }

 private:
  int64_t count_;
  int64_t cap_;
};

// Malformed configuration or data file; `line` is 1-based, 0 if unknown.
class ParseError : public AbdError {
 public:
  ParseError(const std::string& source, int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// Default materialization cap, overridable through ABDSOLVE_NODE_CAP.
inline constexpr int64_t kDefaultNodeCap = 5'000'000;
int64_t NodeCap();

// Lowercase hex encoding of arbitrary bytes and its inverse.
std::string HexEncode(const std::string& bytes);
std::string HexDecode(const std::string& hex);

// Shortest round-trippable-enough form used in every text output: 12
// significant digits.
std::string FormatProb(double value);

}  // namespace abd

#endif  // ABD_EFG_TYPES_H_
