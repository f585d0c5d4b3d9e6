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
 * Security reductions as executable transformations of distinguishers, and
 * the empirical advantage harness.
 *
 * - randomize_to_average: worst-case tuple -> average-case tuple by one
 *   shared right translation (hidden pi becomes tau^{-1} pi tau).
 * - ga_attack: decides a UniqueGA_ff instance by feeding coset-sampled
 *   tuples to a distinguisher and thresholding |R+ - R-|.
 * - hybrid_to_iota: rho+ vs rho- distinguisher -> rho+ vs iota distinguisher.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qscd/graphauto.h"
#include "qscd/qscdff.h"

namespace qscd {

inline constexpr double kDefaultConfidenceDelta = 0.01;

/// sqrt(ln(2/delta) / (2 trials)).
double hoeffding_halfwidth(std::size_t trials, double delta);

struct DistinguisherReport {
    std::string distinguisher;
    std::string source_a;
    std::string source_b;
    std::size_t trials_a = 0;
    std::size_t trials_b = 0;
    std::size_t accepted_a = 0;
    std::size_t accepted_b = 0;
    double advantage = 0.0;
    double ci_halfwidth = 0.0;
    double delta = kDefaultConfidenceDelta;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, std::string>> params;

    double acceptance_a() const { return trials_a ? static_cast<double>(accepted_a) / static_cast<double>(trials_a) : 0.0; }
    double acceptance_b() const { return trials_b ? static_cast<double>(accepted_b) / static_cast<double>(trials_b) : 0.0; }
    /// advantage <= ci_halfwidth
    bool within_ci_of_zero() const { return advantage <= ci_halfwidth; }
};

/// One `key=value` per line, then a `summary ...` line.
std::string format_report(const DistinguisherReport& report);
std::string summary_line(const DistinguisherReport& report);

using TupleSource = std::function<SampleTuple(Rng&)>;

/// Runs `dist` on `trials` fresh tuples from each source. Trial t of source a
/// uses stream 2t, of source b stream 2t+1.
DistinguisherReport estimate_advantage(const Distinguisher& dist, const TupleSource& source_a,
                                       const TupleSource& source_b, std::size_t trials,
                                       std::uint64_t seed, double delta = kDefaultConfidenceDelta);
/// Serial reference of estimate_advantage; identical output.
DistinguisherReport estimate_advantage_serial(const Distinguisher& dist, const TupleSource& source_a,
                                              const TupleSource& source_b, std::size_t trials,
                                              std::uint64_t seed, double delta = kDefaultConfidenceDelta);

/// Draws one uniform tau and right-translates every sample by it.
SampleTuple randomize_to_average(const SampleTuple& tuple, Rng& rng);
SampleTuple randomize_to_average(const SampleTuple& tuple, const Permutation& tau);

struct AttackParams {
    int k = 1;                // samples per tuple
    int p = 1;                // nominal polynomial value p(n)
    int tuples_per_side = 8;  // default formula 8 p^2 n
    int threshold = 4;        // default formula 4 p n
    /// When set, tuples are (challenge, l rho+ key copies) instead of k
    /// copies of the same sign.
    std::optional<int> key_copies;

    /// tuples = 8 p^2 n, threshold = 4 p n.
    static AttackParams from_polynomial(int n, int p, int k);
    static int formula_tuples(int n, int p) { return 8 * p * p * n; }
    static int formula_threshold(int n, int p) { return 4 * p * n; }
    void validate() const;
};

struct AttackOutcome {
    bool yes = false;
    std::size_t accepted_plus = 0;
    std::size_t accepted_minus = 0;
    AttackParams params;
};

/// Builds tuples_per_side tuples from coset_sample(plus) and from
/// coset_sample(minus), runs `dist` on each, answers YES iff
/// |R+ - R-| >= threshold.
AttackOutcome ga_attack(const PromiseInstance& instance, const Distinguisher& dist,
                        const AttackParams& params, std::uint64_t seed);
/// Verifies the promise first (throws PromiseViolation).
AttackOutcome ga_attack(const Graph& g, const Distinguisher& dist, const AttackParams& params,
                        std::uint64_t seed);

enum class HybridVariant {
    /// Half the time run dist, otherwise run dist on converted samples and
    /// report the complement. Advantage on (rho+, iota) is exactly half of
    /// dist's advantage on (rho+, rho-).
    kComplementConverted,
    /// Half the time dist, otherwise dist on converted samples. The two
    /// halves can cancel; kept to demonstrate that.
    kPlainMixture,
};

Distinguisher hybrid_to_iota(Distinguisher dist,
                             HybridVariant variant = HybridVariant::kComplementConverted);

/// Holds the trapdoor. For an FF key (m = 2 involution) it runs the
/// controlled-pi test on the first state; for m > 2 it decodes the first
/// state and accepts on symbol 0.
Distinguisher omniscient_distinguisher(Permutation pi, int m = 2);
Distinguisher coin_distinguisher();
Distinguisher constant_distinguisher(int bit);
/// Measures the first state in the computational basis, accepts on an even
/// permutation.
Distinguisher basis_measure_distinguisher();

}  // namespace qscd
