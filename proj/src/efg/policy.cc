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

#include "abd/efg/policy.h"

#include <algorithm>
#include <cmath>

namespace abd {

int Policy::SampleAction(const State& state, Rng& rng) const {
  return SampleIndex(ActionProbs(state), rng);
}

std::vector<double> UniformPolicy::ActionProbs(const State& state) const {
  int n = state.NumActions();
  return std::vector<double>(n, 1.0 / n);
}

int UniformPolicy::SampleAction(const State& state, Rng& rng) const {
  return static_cast<int>(UniformInt(rng, state.NumActions()));
}

std::vector<double> TabularPolicy::ActionProbs(const State& state) const {
  std::string key = state.ActingInfosetKey();
  auto it = table_.find(key);
  if (it == table_.end()) {
    if (missing_ == Missing::kError) throw MissingInfosetError(key);
    int n = state.NumActions();
    return std::vector<double>(n, 1.0 / n);
  }
  if (static_cast<int>(it->second.probs.size()) != state.NumActions()) {
    throw AbdError("strategy entry for infoset hex " + HexEncode(key) +
                   " has " + std::to_string(it->second.probs.size()) +
                   " actions, history has " +
                   std::to_string(state.NumActions()));
  }
  return it->second.probs;
}

void TabularPolicy::Set(const std::string& key,
                        std::vector<std::string> labels,
                        std::vector<double> probs) {
  if (labels.size() != probs.size()) {
    throw InvalidArgument("label/probability count mismatch for infoset hex " +
                          HexEncode(key));
  }
  table_[key] = Entry{std::move(labels), std::move(probs)};
}

void TabularPolicy::SetAt(const State& state, std::vector<double> probs) {
  Set(state.ActingInfosetKey(), state.ActionLabels(), std::move(probs));
}

const TabularPolicy::Entry* TabularPolicy::Find(const std::string& key) const {
  auto it = table_.find(key);
  return it == table_.end() ? nullptr : &it->second;
}

std::vector<std::string> TabularPolicy::SortedKeys() const {
  std::vector<std::string> keys;
  keys.reserve(table_.size());
  for (const auto& [key, entry] : table_) keys.push_back(key);
  std::sort(keys.begin(), keys.end());
  return keys;
}

void TabularPolicy::Merge(const TabularPolicy& other) {
  for (const auto& [key, entry] : other.table_) table_[key] = entry;
}

std::vector<double> FirstActionPolicy::ActionProbs(const State& state) const {
  std::vector<double> probs(state.NumActions(), 0.0);
  probs[0] = 1.0;
  return probs;
}

void ValidateDistribution(const std::vector<double>& probs, int num_actions,
                          const std::string& where) {
  if (static_cast<int>(probs.size()) != num_actions) {
    throw AbdError(where + ": expected " + std::to_string(num_actions) +
                   " probabilities, got " + std::to_string(probs.size()));
  }
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= -kProbTolerance)) {
      throw AbdError(where + ": negative probability " + FormatProb(p));
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kProbTolerance * std::max(1, num_actions)) {
    throw AbdError(where + ": probabilities sum to " + FormatProb(total));
  }
}

}  // namespace abd
