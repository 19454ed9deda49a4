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

#include "abd/efg/random.h"

#include <cmath>

namespace abd {

uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t Fnv1a64(std::string_view bytes) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

uint64_t DeriveSeed(uint64_t master, uint64_t stream, uint64_t index) {
  return SplitMix64(SplitMix64(master ^ SplitMix64(stream)) + index);
}

uint64_t UniformInt(Rng& rng, uint64_t n) {
  const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

int SampleIndex(const std::vector<double>& probs, Rng& rng) {
  double total = 0.0;
  for (double p : probs) total += p;
  double r = Uniform01(rng) * total;
  int last_positive = 0;
  for (int i = 0; i < static_cast<int>(probs.size()); ++i) {
    if (probs[i] <= 0.0) continue;
    last_positive = i;
    if (r < probs[i]) return i;
    r -= probs[i];
  }
  return last_positive;
}

std::vector<double> SampleSimplex(int n, Rng& rng) {
  // Normalized unit exponentials are uniform on the simplex.
  std::vector<double> x(n);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    x[i] = -std::log1p(-Uniform01(rng));
    total += x[i];
  }
  if (total <= 0.0) {
    for (double& v : x) v = 1.0 / n;
    return x;
  }
  for (double& v : x) v /= total;
  return x;
}

}  // namespace abd
