// Copyright 2026 The dirpat Authors
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

#pragma once

#include <cstddef>
#include <functional>

namespace dirpat::detail {

// Number of workers to use when the caller asks for `jobs` (<= 0 means one
// per hardware thread).
int resolve_jobs(int jobs) noexcept;

// Calls body(i) for every i in [0, count) on up to `jobs` threads.
// Of the calls that throw, the one with the lowest index is rethrown after
// all workers stop.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body);

}  // namespace dirpat::detail
