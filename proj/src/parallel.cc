// Copyright 2026 The qscd Authors.
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

#include "qscd/parallel.h"

#include <atomic>

namespace qscd::kernels {

namespace {
std::atomic<int> g_jobs{0};
}

void set_jobs(int jobs) { g_jobs.store(jobs < 0 ? 0 : jobs); }

int jobs() { return g_jobs.load(); }

}  // namespace qscd::kernels
