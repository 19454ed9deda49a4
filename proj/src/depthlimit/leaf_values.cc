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


#include "abd/depthlimit/leaf_values.h"

#include <utility>

#include "abd/efg/random.h"

namespace abd {

void ValidateValueSource(const ValueSource& source) {
  if (source.mode == ValueMode::kSampled && source.samples < 1) {
    throw InvalidArgument("sampled values need at least one sample, got " +
                          std::to_string(source.samples));
  }
}

ValueMode ParseValueMode(const std::string& text) {
  if (text == "exact") return ValueMode::kExact;
  if (text == "sampled") return ValueMode::kSampled;
  throw InvalidArgument("value mode must be exact or sampled, got '" + text +
                        "'");
}

namespace {

double ExactRec(const State& s, const Policy& pi1, const Policy& pi2,
                int64_t cap, int64_t& count) {
  if (++count > cap) throw NodeCapExceeded(count, cap);
  if (s.IsTerminal()) return s.UtilityP1();
  std::vector<double> probs;
  if (s.IsChance()) {
    probs = s.ChanceProbs();
  } else {
    probs = (s.Role() == PlayerRole::kP1 ? pi1 : pi2).ActionProbs(s);
  }
  double v = 0.0;
  for (int a = 0; a < static_cast<int>(probs.size()); ++a) {
    if (probs[a] > 0.0) v += probs[a] * ExactRec(*s.Child(a), pi1, pi2, cap, count);
  }
  return v;
}

}  // namespace

double ExactValue(const State& h, const Policy& pi1, const Policy& pi2,
                  int64_t node_cap) {
  int64_t count = 0;
  return ExactRec(h, pi1, pi2, node_cap, count);
}

double SampledValue(const State& h, const Policy& pi1, const Policy& pi2,
                    int samples, uint64_t seed, uint64_t index) {
  Rng rng(DeriveSeed(seed, Fnv1a64(h.HistoryKey()), index));
  double total = 0.0;
  for (int n = 0; n < samples; ++n) {
    std::unique_ptr<State> s = h.Clone();
    while (!s->IsTerminal()) {
      int a;
      if (s->IsChance()) {
        a = SampleIndex(s->ChanceProbs(), rng);
      } else if (s->Role() == PlayerRole::kP1) {
        a = pi1.SampleAction(*s, rng);
      } else {
        a = pi2.SampleAction(*s, rng);
      }
      s->ApplyAction(a);
    }
    total += s->UtilityP1();
  }
  return total / samples;
}

LeafValueTable::LeafValueTable(Portfolio p1, Portfolio p2, PolicyPtr fixed,
                               ValueSource fixed_values,
                               int64_t rational_node_cap)
    : p1_(std::move(p1)),
      p2_(std::move(p2)),
      fixed_(std::move(fixed)),
      fixed_values_(fixed_values),
      rational_node_cap_(rational_node_cap) {
  ValidateValueSource(fixed_values_);
  if (p1_.size() == 0) throw InvalidArgument("P1 portfolio is empty");
}

double LeafValueTable::Value(const State& h, int i, int j) {
  auto key = std::make_tuple(h.HistoryKey(), i, j);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second.value;
  }
  if (i < 0 || i >= p1_.size()) throw InvalidArgument("P1 entry out of range");
  Entry entry;
  int64_t rollouts = 0;
  const Policy& pi1 = p1_.at(i);
  auto sampled = [&](const Policy& pi2, uint64_t index) {
    rollouts += fixed_values_.samples;
    entry.provenance = "sampled(" + std::to_string(fixed_values_.samples) +
                       "," + std::to_string(fixed_values_.seed) + ")";
    return SampledValue(h, pi1, pi2, fixed_values_.samples, fixed_values_.seed,
                        index);
  };
  if (j == kFixedColumn) {
    if (fixed_ == nullptr) {
      throw InvalidArgument("fixed-opponent leaf without a fixed opponent");
    }
    if (fixed_values_.mode == ValueMode::kExact) {
      entry.provenance = "exact";
      entry.value = ExactValue(h, pi1, *fixed_);
    } else {
      entry.value = sampled(*fixed_, static_cast<uint64_t>(i));
    }
  } else {
    if (j < 0 || j >= p2_.size()) throw InvalidArgument("P2 entry out of range");
    const Policy& pi2 = p2_.at(j);
    try {
      entry.provenance = "exact";
      entry.value = ExactValue(h, pi1, pi2, rational_node_cap_);
    } catch (const NodeCapExceeded&) {
      // Indices past the fixed-column range keep the streams apart.
      entry.value = sampled(pi2, static_cast<uint64_t>(p1_.size()) *
                                     (static_cast<uint64_t>(j) + 1) +
                                 static_cast<uint64_t>(i));
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  rollouts_ += rollouts;
  cache_.emplace(key, entry);
  return entry.value;
}

int64_t LeafValueTable::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return static_cast<int64_t>(cache_.size());
}

int64_t LeafValueTable::rollouts() const {
  std::lock_guard<std::mutex> lock(mu_);
  return rollouts_;
}

void LeafValueTable::Dump(std::ostream& out) const {
  std::lock_guard<std::mutex> lock(mu_);
  out << "history_key,provenance,p1_name,p2_name,value\n";
  for (const auto& [key, entry] : cache_) {
    const auto& [history, i, j] = key;
    out << HexEncode(history) << ',' << '"' << entry.provenance << '"' << ','
        << p1_.EntryName(i) << ','
        << (j == kFixedColumn ? fixed_->Name() : p2_.EntryName(j)) << ','
        << FormatProb(entry.value) << '\n';
  }
}

}  // namespace abd
