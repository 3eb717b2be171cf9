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

#ifndef PURIFY_PARALLEL_H
#define PURIFY_PARALLEL_H

namespace purify {

/// Number of OpenMP threads the parallel kernels use. Defaults to the OpenMP
/// maximum, capped by the PURIFY_THREADS environment variable when set.
int thread_count();

/// Overrides thread_count() for the rest of the process (0 restores the default).
void set_thread_count(int threads);

}  // namespace purify

#endif
