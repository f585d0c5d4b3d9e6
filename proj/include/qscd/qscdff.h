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
 * Fully-flipped coset states. For a hidden pi in K_n the mixed states
 * rho+ and rho- are uniform mixtures over sigma of (|sigma> +- |sigma pi>)/sqrt2;
 * iota is the uniform mixture of |sigma>. Each draw here is one pure member of
 * the mixture together with a provenance tag that only orchestration code
 * reads.
 *
 * Every function taking pi throws std::invalid_argument unless pi is in K_n:
 * a fixed-point-free involution with n = 2 (mod 4).
 */

#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qscd/perm.h"
#include "qscd/qstate.h"
#include "qscd/rng.h"

namespace qscd {

struct Provenance {
    enum class Kind { kPlus, kMinus, kIota, kPhi };

    Kind kind = Kind::kIota;
    std::optional<Permutation> pi;  // hidden permutation, absent for iota
    int symbol = 0;                 // message symbol for kPhi

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

std::string to_string(Provenance::Kind kind);

/// One draw from rho+, rho-, iota (control-free, m = 1) or from rho^(s)
/// (see qscdcyc.h).
struct PureSample {
    SparseState state;
    Provenance provenance;
};

/// k samples sharing one hidden permutation (or all iota).
struct SampleTuple {
    std::vector<PureSample> samples;
};

/// The part of a tuple a distinguisher is allowed to see.
std::vector<SparseState> states_of(const SampleTuple& tuple);

/// A distinguisher returns a bit from the states alone.
using Distinguisher = std::function<int(std::span<const SparseState>, Rng&)>;

/// Distinguisher answers, as bits.
inline constexpr int kYes = 1;
inline constexpr int kNo = 0;

/// rho+ generation: |0>|id>, Hadamard on the control, controlled-pi,
/// uncompute the control where the permutation register holds pi, left
/// translation by uniform sigma, emit the permutation register.
PureSample gen_plus(const Permutation& pi, Rng& rng);
/// Same procedure with the left translation fixed to `sigma`.
PureSample gen_plus_at(const Permutation& pi, const Permutation& sigma);

/// |sigma> with sigma uniform.
PureSample gen_iota(int n, Rng& rng);

/// Phase (-1)^{sgn} on every basis vector. Sends a PLUS(pi) sample to a
/// MINUS(pi) sample when pi is odd, and fixes iota up to global phase.
PureSample convert(const PureSample& sample);

/// Controlled-pi test: control |0>, Hadamard, controlled-pi, Hadamard,
/// measure the control. Outcome 0 is YES (kYes), anything else NO.
int distinguish(const SparseState& state, const Permutation& pi, Rng& rng);
int distinguish(const PureSample& sample, const Permutation& pi, Rng& rng);

/// Exact outcome probabilities {P(0), P(1)} of the controlled-pi test.
std::array<double, 2> distinguish_probabilities(const SparseState& state, const Permutation& pi);

SampleTuple plus_tuple(const Permutation& pi, int k, Rng& rng);
SampleTuple minus_tuple(const Permutation& pi, int k, Rng& rng);
SampleTuple iota_tuple(int n, int k, Rng& rng);

}  // namespace qscd
