// Copyright 2026 The mqt developers
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

#ifndef MQT_PARALLEL_HPP
#define MQT_PARALLEL_HPP

#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace mqt {

/// Worker count resolution: an explicit request wins, then the MQT_WORKERS
/// environment variable, then single-threaded.
inline std::size_t resolve_workers(std::size_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("MQT_WORKERS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1;
}

/// Runs fn(begin, end) over a partition of [0, total) into one contiguous
/// chunk per worker. Results must be written to disjoint, index-addressed
/// slots so the outcome is independent of the worker count.
template <typename Fn>
void parallel_chunks(std::size_t total, std::size_t workers, Fn fn) {
  if (total == 0) return;
  if (workers <= 1 || total == 1) {
    fn(std::size_t{0}, total);
    return;
  }
  if (workers > total) workers = total;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t base = total / workers;
  std::size_t extra = total % workers;
  std::size_t begin = 0;
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t len = base + (w < extra ? 1 : 0);
    std::size_t end = begin + len;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    begin = end;
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace mqt

#endif
