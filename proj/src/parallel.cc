// Copyright 2026 The salt_pepper Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "salt_pepper/parallel.h"

#include <algorithm>
#include <thread>
#include <vector>

namespace salt_pepper {

int ResolveThreadCount(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void ParallelForRows(int rows, int threads,
                     const std::function<void(int, int)>& fn) {
  const int workers = std::min(ResolveThreadCount(threads), std::max(rows, 1));
  if (workers <= 1) {
    fn(0, rows);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const int base = rows / workers;
  const int extra = rows % workers;
  int begin = 0;
  for (int i = 0; i < workers; ++i) {
    const int end = begin + base + (i < extra ? 1 : 0);
    pool.emplace_back(fn, begin, end);
    begin = end;
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace salt_pepper
