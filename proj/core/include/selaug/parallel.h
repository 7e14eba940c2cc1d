// Copyright (c) 2026 The selaug Authors
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

#ifndef SELAUG_PARALLEL_H_
#define SELAUG_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace selaug {

// Applies fn to every element on up to `workers` threads and returns the
// results in input order. If several elements throw, the exception of the
// lowest index is rethrown, so failures do not depend on scheduling.
template <typename In, typename Fn>
auto ParallelMap(const std::vector<In>& items, int workers, Fn fn)
    -> std::vector<decltype(fn(items.front()))> {
  using Out = decltype(fn(items.front()));
  const size_t n = items.size();
  std::vector<std::optional<Out>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  const size_t threads =
      std::min<size_t>(n, static_cast<size_t>(std::max(workers, 1)));

  std::atomic<size_t> next{0};
  auto run = [&] {
    for (size_t i = next++; i < n; i = next++) {
      try {
        slots[i].emplace(fn(items[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (size_t t = 0; t < threads; ++t) pool.emplace_back(run);
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<Out> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

// Items processed per parallel batch by the streaming corpus operations.
inline constexpr size_t kStreamBatchSize = 512;

}  // namespace selaug

#endif  // SELAUG_PARALLEL_H_
