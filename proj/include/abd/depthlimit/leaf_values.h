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


#ifndef ABD_DEPTHLIMIT_LEAF_VALUES_H_
#define ABD_DEPTHLIMIT_LEAF_VALUES_H_

#include <cstdint>
#include <map>
#include <mutex>
#include <ostream>
#include <string>
#include <tuple>

#include "abd/efg/game.h"
#include "abd/efg/policy.h"
#include "abd/efg/portfolio.h"

namespace abd {

enum class ValueMode { kExact, kSampled };

struct ValueSource {
  ValueMode mode = ValueMode::kExact;
  int samples = 1;  // Rollouts per (history, portfolio entry).
  uint64_t seed = 0;
};

void ValidateValueSource(const ValueSource& source);
ValueMode ParseValueMode(const std::string& text);

// Expected P1 utility below `h` under (pi1, pi2) and chance.
double ExactValue(const State& h, const Policy& pi1, const Policy& pi2,
                  int64_t node_cap = NodeCap());

// Mean P1 utility of `samples` rollouts from `h`; the generator is seeded
// from (seed, FNV-1a of h's history key, index) only.
double SampledValue(const State& h, const Policy& pi1, const Policy& pi2,
                    int samples, uint64_t seed, uint64_t index);

// Payoff entries of matrix leaves, computed on first use and cached. Values
// depend only on (history, entries, source), never on evaluation order.
class LeafValueTable {
 public:
  // Column index of the fixed opponent.
  static constexpr int kFixedColumn = -1;

  // `fixed` may be null when no fixed-opponent leaves occur. Fixed columns
  // follow `fixed_values`; portfolio-vs-portfolio entries are exact when
  // the subtree fits `rational_node_cap`, else sampled like the fixed ones.
  LeafValueTable(Portfolio p1, Portfolio p2, PolicyPtr fixed,
                 ValueSource fixed_values,
                 int64_t rational_node_cap = 200'000);

  const Portfolio& p1() const { return p1_; }
  const Portfolio& p2() const { return p2_; }
  const PolicyPtr& fixed() const { return fixed_; }
  const ValueSource& fixed_values() const { return fixed_values_; }

  // `h` must be a base-game history. j is a P2 entry or kFixedColumn.
  double Value(const State& h, int i, int j);

  int64_t size() const;
  int64_t rollouts() const;

  // CSV with header history_key,provenance,p1_name,p2_name,value; history
  // keys are hex encoded; rows sorted.
  void Dump(std::ostream& out) const;

 private:
  struct Entry {
    std::string provenance;
    double value;
  };

  Portfolio p1_;
  Portfolio p2_;
  PolicyPtr fixed_;
  ValueSource fixed_values_;
  int64_t rational_node_cap_;
  mutable std::mutex mu_;
  std::map<std::tuple<std::string, int, int>, Entry> cache_;
  int64_t rollouts_ = 0;
};

}  // namespace abd

#endif  // ABD_DEPTHLIMIT_LEAF_VALUES_H_
