// Copyright 2026 The Fairstop Authors
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

#ifndef FAIRSTOP_PARALLEL_H_
#define FAIRSTOP_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fairstop {

// Worker count from FAIRSTOP_WORKERS, else the hardware concurrency.
int DefaultWorkers();

// Evaluates fn(0..count-1) on up to `workers` threads and returns the
// results in index order. The first exception thrown by fn is rethrown.
template <typename Fn>
auto RunIndexed(int count, int workers, Fn fn)
    -> std::vector<decltype(fn(0))> {
  std::vector<decltype(fn(0))> results(count);
  workers = std::clamp(workers, 1, std::max(count, 1));
  if (workers == 1) {
    for (int k = 0; k < count; ++k) results[k] = fn(k);
    return results;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (int k = next++; k < count; k = next++) {
      try {
        results[k] = fn(k);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::jthread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  pool.clear();
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace fairstop

#endif  // FAIRSTOP_PARALLEL_H_
