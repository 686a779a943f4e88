// Copyright 2026 The steerlab Authors
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

#ifndef STEERLAB_PARALLEL_H
#define STEERLAB_PARALLEL_H

#include <cstddef>
#include <functional>

namespace steerlab {

/// STEERLAB_THREADS if set to a positive integer, otherwise the hardware
/// concurrency (at least 1).
int worker_count();

/// Runs fn(worker) for worker in [0, workers) on separate threads and joins.
/// The first exception thrown by any worker is rethrown.
void run_workers(int workers, const std::function<void(int)>& fn);

/// Share of `total` items assigned to `worker` out of `workers`.
std::size_t share(std::size_t total, int workers, int worker);

}  // namespace steerlab

#endif  // STEERLAB_PARALLEL_H
