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

#ifndef ABD_EFG_RANDOM_H_
#define ABD_EFG_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace abd {

using Rng = std::mt19937_64;

uint64_t SplitMix64(uint64_t x);
uint64_t Fnv1a64(std::string_view bytes);

// Counter-based seed split: the seed of item `index` in stream `stream`
// depends only on (master, stream, index), so adding items never changes the
// seeds of existing ones.
uint64_t DeriveSeed(uint64_t master, uint64_t stream, uint64_t index);

// Uniform double in [0, 1) from the top 53 bits of one draw. Unlike
// std::uniform_real_distribution this is identical across standard libraries.
inline double Uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n) by rejection; n > 0.
uint64_t UniformInt(Rng& rng, uint64_t n);

// Samples an index from a probability vector (need not be exactly
// normalized).
int SampleIndex(const std::vector<double>& probs, Rng& rng);

// Uniform draw from the probability simplex of dimension n.
std::vector<double> SampleSimplex(int n, Rng& rng);

}  // namespace abd

#endif  // ABD_EFG_RANDOM_H_
