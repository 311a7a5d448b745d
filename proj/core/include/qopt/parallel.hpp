// Copyright 2026 The qopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>

namespace qopt {

/// Number of worker threads to use: `requested` if positive, otherwise the
/// QOPT_THREADS environment variable, otherwise hardware concurrency.
int resolve_thread_count(int requested);

/// Runs fn(0..n-1) across `threads` workers. Tasks must write only to
/// their own output slots; with that discipline results are independent of
/// scheduling, so any thread count produces identical data. threads <= 1
/// runs inline. The first exception thrown by a task is rethrown.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace qopt
