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

#ifndef ABD_EFG_POLICY_H_
#define ABD_EFG_POLICY_H_

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "abd/efg/game.h"
#include "abd/efg/random.h"

namespace abd {

// A behavioral strategy. ActionProbs is queried at histories where the
// owning player acts and returns one probability per legal action.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual std::vector<double> ActionProbs(const State& state) const = 0;
  virtual int SampleAction(const State& state, Rng& rng) const;
  virtual std::string Name() const = 0;
};

using PolicyPtr = std::shared_ptr<const Policy>;

class UniformPolicy : public Policy {
 public:
  std::vector<double> ActionProbs(const State& state) const override;
  int SampleAction(const State& state, Rng& rng) const override;
  std::string Name() const override { return "uniform"; }
};

// Table from infoset key to a distribution. Unknown infosets either raise
// MissingInfosetError or fall back to uniform.
class TabularPolicy : public Policy {
 public:
  enum class Missing { kError, kUniform };

  struct Entry {
    std::vector<std::string> labels;
    std::vector<double> probs;
  };

  explicit TabularPolicy(std::string name = "tabular",
                         Missing missing = Missing::kUniform)
      : name_(std::move(name)), missing_(missing) {}

  std::vector<double> ActionProbs(const State& state) const override;
  std::string Name() const override { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  Missing missing() const { return missing_; }
  void set_missing(Missing missing) { missing_ = missing; }

  void Set(const std::string& key, std::vector<std::string> labels,
           std::vector<double> probs);
  // Sets the entry for the acting infoset of `state`.
  void SetAt(const State& state, std::vector<double> probs);
  const Entry* Find(const std::string& key) const;
  bool Contains(const std::string& key) const { return Find(key) != nullptr; }
  size_t size() const { return table_.size(); }
  std::vector<std::string> SortedKeys() const;
  const std::unordered_map<std::string, Entry>& table() const {
    return table_;
  }
  // Copies every entry of `other`, overwriting existing keys.
  void Merge(const TabularPolicy& other);

 private:
  std::string name_;
  Missing missing_;
  std::unordered_map<std::string, Entry> table_;
};

// Deterministic policy returning a point mass on the lowest-index action.
class FirstActionPolicy : public Policy {
 public:
  std::vector<double> ActionProbs(const State& state) const override;
  std::string Name() const override { return "first_action"; }
};

// Checks that `probs` is a distribution over `num_actions` actions.
void ValidateDistribution(const std::vector<double>& probs, int num_actions,
                          const std::string& where);

}  // namespace abd

#endif  // ABD_EFG_POLICY_H_
