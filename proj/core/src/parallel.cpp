// Copyright 2026 The LatticeLab Authors
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

#include "latticelab/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace latticelab::parallel {
namespace {

std::atomic<unsigned>& configured() {
  static std::atomic<unsigned> n{std::max(1u, std::thread::hardware_concurrency())};
  return n;
}

}  // namespace

unsigned thread_count() { return configured().load(); }

void set_thread_count(unsigned n) { configured().store(std::max(1u, n)); }

void for_each_chunk(std::size_t n, std::size_t chunks,
                    const std::function<void(std::size_t, std::size_t,
                                             std::size_t)>& fn) {
  chunks = std::max<std::size_t>(1, std::min(chunks, n));
  auto bounds = [&](std::size_t c) { return c * n / chunks; };
  if (chunks == 1 || thread_count() == 1) {
    for (std::size_t c = 0; c < chunks; ++c) fn(c, bounds(c), bounds(c + 1));
    return;
  }
  std::vector<std::exception_ptr> errors(chunks);
  {
    std::vector<std::jthread> workers;
    workers.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
      workers.emplace_back([&, c] {
        try {
          fn(c, bounds(c), bounds(c + 1));
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace latticelab::parallel
