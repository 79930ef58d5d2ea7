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

#pragma once

#include <cstddef>
#include <functional>

namespace latticelab::parallel {

// Worker count used by every parallel sweep in the library. Defaults to the
// machine's hardware concurrency; 1 selects the serial reference path.
unsigned thread_count();
void set_thread_count(unsigned n);

// Splits [0, n) into `chunks` contiguous ranges and runs
// fn(chunk_index, begin, end) for each, concurrently when thread_count() > 1.
// Exceptions from workers are rethrown (first by chunk index).
void for_each_chunk(std::size_t n, std::size_t chunks,
                    const std::function<void(std::size_t, std::size_t,
                                             std::size_t)>& fn);

// RAII override of the thread count, restoring the previous value.
class ScopedThreadCount {
 public:
  explicit ScopedThreadCount(unsigned n) : saved_(thread_count()) {
    set_thread_count(n);
  }
  ~ScopedThreadCount() { set_thread_count(saved_); }
  ScopedThreadCount(const ScopedThreadCount&) = delete;
  ScopedThreadCount& operator=(const ScopedThreadCount&) = delete;

 private:
  unsigned saved_;
};

}  // namespace latticelab::parallel
