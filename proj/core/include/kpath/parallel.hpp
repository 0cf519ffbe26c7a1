// Copyright 2026 The kpath Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KPATH_PARALLEL_HPP
#define KPATH_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace kpath {

/// Worker count used by parallel_for. Defaults to the KPATH_THREADS
/// environment variable when set, else std::thread::hardware_concurrency().
std::size_t thread_count();

/// Overrides the worker count for the rest of the process (0 restores the default).
void set_thread_count(std::size_t n);

/// Calls body(i) for i in [0, n) on up to thread_count() threads. Each index is
/// visited exactly once; results written to distinct slots are therefore
/// independent of scheduling. The first exception thrown by any body is
/// rethrown after all workers have stopped.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace kpath

#endif  // KPATH_PARALLEL_HPP
