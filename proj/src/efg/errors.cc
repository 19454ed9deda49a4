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

#include <cstdio>
#include <cstdlib>
#include <string>

#include "abd/efg/types.h"

namespace abd {

std::string PlayerName(Player p) { return p == Player::kP1 ? "P1" : "P2"; }

std::string RoleName(PlayerRole role) {
  switch (role) {
    case PlayerRole::kP1:
      return "P1";
    case PlayerRole::kP2:
      return "P2";
    case PlayerRole::kChance:
      return "Chance";
    case PlayerRole::kTerminal:
      return "Terminal";
  }
  return "?";
}

MissingInfosetError::MissingInfosetError(std::string key)
    : AbdError("strategy has no entry for infoset '" + key + "' (hex " +
               HexEncode(key) + ")"),
      key_(std::move(key)) {}

NodeCapExceeded::NodeCapExceeded(int64_t count, int64_t cap)
    : AbdError("node cap exceeded: reached " + std::to_string(count) +
               " nodes (cap " + std::to_string(cap) +
               "; set ABDSOLVE_NODE_CAP to raise it)"),
      count_(count),
      cap_(cap) {}

ParseError::ParseError(const std::string& source, int line,
                       const std::string& message)
    : AbdError(source + (line > 0 ? ":" + std::to_string(line) : "") + ": " +
               message),
      line_(line) {}

int64_t NodeCap() {
  const char* env = std::getenv("ABDSOLVE_NODE_CAP");
  if (env == nullptr || *env == '\0') return kDefaultNodeCap;
  char* end = nullptr;
  long long value = std::strtoll(env, &end, 10);
  if (end == env || *end != '\0' || value <= 0) {
    throw InvalidArgument(std::string("ABDSOLVE_NODE_CAP must be a positive "
                                      "integer, got '") +
                          env + "'");
  }
  return static_cast<int64_t>(value);
}

std::string HexEncode(const std::string& bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 15]);
  }
  return out;
}

namespace {
int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}
}  // namespace

std::string HexDecode(const std::string& hex) {
  if (hex.size() % 2 != 0) {
    throw InvalidArgument("odd-length hex string '" + hex + "'");
  }
  std::string out;
  out.reserve(hex.size() / 2);
  for (size_t i = 0; i < hex.size(); i += 2) {
    int hi = HexValue(hex[i]);
    int lo = HexValue(hex[i + 1]);
    if (hi < 0 || lo < 0) {
      throw InvalidArgument("invalid hex digit in '" + hex + "'");
    }
    out.push_back(static_cast<char>(hi * 16 + lo));
  }
  return out;
}

std::string FormatProb(double value) {
  char buf[64];
  if (value == 0.0) value = 0.0;  // Prints negative zero as "0".
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

}  // namespace abd
