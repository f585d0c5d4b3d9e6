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

#pragma once

#include <cstdint>
#include <random>

namespace qscd {

using Rng = std::mt19937_64;

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed of independent stream `index` under `root`:
/// stream_seed(root, i) = mix64(mix64(root) ^ mix64(i + 1)).
/// Every parallel trial loop seeds trial i with this, so results do not
/// depend on thread count or scheduling.
constexpr std::uint64_t stream_seed(std::uint64_t root, std::uint64_t index) {
    return mix64(mix64(root) ^ mix64(index + 1));
}

inline Rng make_stream(std::uint64_t root, std::uint64_t index) {
    return Rng(stream_seed(root, index));
}

/// Uniform integer in [0, bound).
inline int uniform_below(Rng& rng, int bound) {
    return std::uniform_int_distribution<int>(0, bound - 1)(rng);
}

inline double uniform_unit(Rng& rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

}  // namespace qscd
