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
 * Exact sparse simulation of a two-register system: a control register over
 * Z_m and a permutation register over S_n. Only basis vectors with nonzero
 * amplitude are stored, so a state never materializes S_n.
 *
 * States are values; every operation returns a new state.
 */

#pragma once

#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qscd/perm.h"
#include "qscd/rng.h"

namespace qscd {

using Amplitude = std::complex<double>;

inline constexpr double kAmplitudeTolerance = 1e-9;
inline constexpr double kPruneThreshold = 1e-12;

struct BasisVector {
    int control = 0;
    Permutation perm = Permutation::identity(1);

    friend bool operator==(const BasisVector&, const BasisVector&) = default;
    friend auto operator<=>(const BasisVector& a, const BasisVector& b) {
        if (auto c = a.control <=> b.control; c != 0) return c;
        return a.perm <=> b.perm;
    }
};

class SparseState {
public:
    using Map = std::map<BasisVector, Amplitude>;

    /// Empty (zero) vector; only useful as a build target.
    SparseState(int n, int m);

    int degree() const { return n_; }
    int modulus() const { return m_; }
    const Map& amplitudes() const { return amps_; }
    std::size_t support_size() const { return amps_.size(); }

    Amplitude amplitude(int control, const Permutation& perm) const;
    double norm() const;

    /// Adds `amp` to the entry; entries that cancel below the prune threshold
    /// are removed.
    void accumulate(int control, const Permutation& perm, Amplitude amp);

private:
    int n_;
    int m_;
    Map amps_;
};

/// |control>|sigma> with control register over Z_m.
SparseState basis_state(int control, const Permutation& sigma, int m);

/// Build a control-free (m = 1) state from (permutation, amplitude) pairs.
SparseState superposition(int n, const std::vector<std::pair<Permutation, Amplitude>>& terms);

enum class FourierDirection { kForward, kInverse };

/// |r> -> m^{-1/2} sum_r' w^{+-r r'} |r'> on the control register,
/// w = exp(2 pi i / m). For m = 2 both directions are the Hadamard gate.
SparseState fourier_control(const SparseState& state, FourierDirection direction);

/// |r>|sigma> -> |r>|sigma pi^r>.
SparseState controlled_power(const SparseState& state, const Permutation& pi);

/// |r>|sigma> -> (-1)^{sgn sigma} |r>|sigma>.
SparseState phase_by_sign(const SparseState& state);

enum class Side { kLeft, kRight };

/// perm -> tau perm (left) or perm tau (right).
SparseState translate(const SparseState& state, const Permutation& tau, Side side);

/// |r>|sigma> -> |r - 1 mod m>|sigma> exactly when sigma == target.
SparseState decrement_control_where(const SparseState& state, const Permutation& target);

/// Widen an m = 1 state into control register Z_m, control set to |0>.
SparseState attach_control(const SparseState& state, int m);
/// Drop the control register. Every entry must have control 0.
SparseState detach_control(const SparseState& state);

/// Born probabilities of each control value.
std::vector<double> control_distribution(const SparseState& state);

struct ControlMeasurement {
    int outcome;
    SparseState collapsed;
};
ControlMeasurement measure_control(const SparseState& state, Rng& rng);

struct FullMeasurement {
    int control;
    Permutation perm;
};
FullMeasurement measure_full(const SparseState& state, Rng& rng);

/// <a|b>.
Amplitude inner_product(const SparseState& a, const SparseState& b);

/// Entrywise agreement within kAmplitudeTolerance, optionally after aligning a
/// global phase.
bool states_equal(const SparseState& a, const SparseState& b, bool up_to_global_phase);

/// Text form:
///   QSTATE n m entries
///   control re im n: i1 ... in     (one per entry, basis order)
/// Reals use 17 significant digits so parsing restores the exact doubles.
std::string serialize_state(const SparseState& state);
SparseState parse_state(std::string_view text);

}  // namespace qscd
