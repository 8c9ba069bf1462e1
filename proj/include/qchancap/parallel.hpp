// Copyright 2026 The qchancap Authors
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

namespace qchancap {

/// Number of worker threads used by library-level parallel loops. Defaults to
/// std::thread::hardware_concurrency(). Values < 1 reset to the default.
void set_thread_count(int n);
int thread_count();

/// Runs body(i) for i in [0, n). Iterations must write only to their own
/// slot; callers reduce afterwards in index order. The first exception thrown
/// by any iteration is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace qchancap
