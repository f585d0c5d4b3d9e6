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

/**
 * @file
 * Trial-loop kernels. Trial t always runs on its own stream
 * make_stream(seed, t), and results are combined by summation, so the
 * OpenMP kernel returns exactly what the serial reference returns for any
 * thread count.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <utility>

#ifdef QSCD_WITH_OPENMP
#include <omp.h>
#endif

#include "qscd/rng.h"

namespace qscd::kernels {

/// Worker count for the parallel kernels; 0 leaves the OpenMP default.
void set_jobs(int jobs);
int jobs();

/// Serial reference: number of trials t in [0, trials) with
/// trial(rng_t, t) true.
template <typename Trial>
std::size_t count_accepts_serial(std::size_t trials, std::uint64_t seed, Trial&& trial) {
    std::size_t count = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = make_stream(seed, t);
        if (trial(rng, t)) ++count;
    }
    return count;
}

template <typename Trial>
std::size_t count_accepts(std::size_t trials, std::uint64_t seed, Trial&& trial) {
#ifdef QSCD_WITH_OPENMP
    std::size_t count = 0;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const long long total = static_cast<long long>(trials);
    const int workers = jobs();
#pragma omp parallel for reduction(+ : count) schedule(static) num_threads(workers > 0 ? workers : omp_get_max_threads())
    for (long long t = 0; t < total; ++t) {
        try {
            Rng rng = make_stream(seed, static_cast<std::uint64_t>(t));
            if (trial(rng, static_cast<std::size_t>(t))) ++count;
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return count;
#else
    return count_accepts_serial(trials, seed, std::forward<Trial>(trial));
#endif
}

}  // namespace qscd::kernels
