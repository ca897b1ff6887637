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

#ifndef SALT_PEPPER_PARALLEL_H_
#define SALT_PEPPER_PARALLEL_H_

#include <functional>

namespace salt_pepper {

// Number of workers to use for a request of `threads`; 0 means one per
// hardware thread.
int ResolveThreadCount(int threads);

// Splits [0, rows) into contiguous bands and calls fn(begin, end) for each,
// on up to `threads` workers. Returns after every band is done.
void ParallelForRows(int rows, int threads,
                     const std::function<void(int, int)>& fn);

}  // namespace salt_pepper

#endif  // SALT_PEPPER_PARALLEL_H_
