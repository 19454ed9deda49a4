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

#ifndef ABD_EFG_PARALLEL_H_
#define ABD_EFG_PARALLEL_H_

#include <cstdint>
#include <functional>

namespace abd {

// Worker count: ABDSOLVE_THREADS if set, else hardware concurrency.
int DefaultThreads();

// Runs fn(i) for i in [0, n) on up to `threads` workers (0 = default).
// Items are claimed dynamically; the first exception is rethrown after all
// workers stop. Callers must make fn(i) independent of execution order.
void ParallelFor(int64_t n, const std::function<void(int64_t)>& fn,
                 int threads = 0);

}  // namespace abd

#endif  // ABD_EFG_PARALLEL_H_
