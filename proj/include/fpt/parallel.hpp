// Copyright 2026 The fpt Authors
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

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "fpt/error.hpp"

namespace fpt {

/// Calls body(i) for every i in [0, n) on up to `workers` threads. Work is
/// handed out in fixed-size chunks; callers write results by index so the
/// outcome does not depend on scheduling. If any call throws, the failure with
/// the smallest index is rethrown as Error with the index in its message.
template <class Body>
void parallel_for(std::uint64_t n, unsigned workers, Body&& body) {
  constexpr std::uint64_t kChunk = 256;
  workers = std::max(1u, workers);
  const auto n_chunks = (n + kChunk - 1) / kChunk;
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, std::max<std::uint64_t>(n_chunks, 1)));

  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  std::uint64_t error_index = std::numeric_limits<std::uint64_t>::max();
  std::exception_ptr error;

  auto worker = [&] {
    for (;;) {
      if (failed.load(std::memory_order_relaxed)) return;
      const std::uint64_t chunk = next_chunk.fetch_add(1);
      if (chunk >= n_chunks) return;
      const std::uint64_t end = std::min(n, (chunk + 1) * kChunk);
      for (std::uint64_t i = chunk * kChunk; i < end; ++i) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (i < error_index) {
            error_index = i;
            error = std::current_exception();
          }
          failed.store(true);
          return;
        }
      }
    }
  };

  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  if (error) {
    try {
      std::rethrow_exception(error);
    } catch (const Error& e) {
      throw Error(e.code(),
                  "trial " + std::to_string(error_index) + ": " + e.what());
    } catch (const std::exception& e) {
      throw Error(ErrorCode::kInternal,
                  "trial " + std::to_string(error_index) + ": " + e.what());
    }
  }
}

}  // namespace fpt
