// Copyright 2026 The purify Authors
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

#include "purify/parallel.h"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>

namespace purify {

namespace {
std::atomic<int> override_threads{0};
}

int thread_count() {
    int forced = override_threads.load();
    if (forced > 0) {
        return forced;
    }
    int threads = omp_get_max_threads();
    if (const char *env = std::getenv("PURIFY_THREADS")) {
        int cap = std::atoi(env);
        if (cap > 0) {
            threads = std::min(threads, cap);
        }
    }
    return std::max(threads, 1);
}

void set_thread_count(int threads) {
    override_threads.store(std::max(threads, 0));
}

}  // namespace purify
