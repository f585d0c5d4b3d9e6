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

#include "qscd/reductions.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "qscd/parallel.h"
#include "qscd/qscdcyc.h"

namespace qscd {

namespace {

std::string fixed6(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

template <typename Counter>
DistinguisherReport run_advantage(const Distinguisher& dist, const TupleSource& source_a,
                                  const TupleSource& source_b, std::size_t trials, std::uint64_t seed,
                                  double delta, Counter&& counter) {
    if (trials < 1) throw std::invalid_argument("estimate_advantage: trials must be positive");
    auto run_source = [&](const TupleSource& source, std::uint64_t parity) {
        return counter(trials, seed, [&](Rng&, std::size_t t) {
            Rng rng = make_stream(seed, 2 * static_cast<std::uint64_t>(t) + parity);
            const auto states = states_of(source(rng));
            return dist(states, rng) == kYes;
        });
    };
    DistinguisherReport r;
    r.trials_a = r.trials_b = trials;
    r.accepted_a = run_source(source_a, 0);
    r.accepted_b = run_source(source_b, 1);
    r.advantage = std::abs(r.acceptance_a() - r.acceptance_b());
    r.delta = delta;
    r.ci_halfwidth = hoeffding_halfwidth(trials, delta);
    r.seed = seed;
    return r;
}

}  // namespace

double hoeffding_halfwidth(std::size_t trials, double delta) {
    if (trials == 0 || delta <= 0.0 || delta >= 1.0) throw std::invalid_argument("hoeffding_halfwidth: bad arguments");
    return std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(trials)));
}

std::string format_report(const DistinguisherReport& r) {
    std::string out;
    auto kv = [&](const std::string& k, const std::string& v) { out += k + "=" + v + "\n"; };
    kv("distinguisher", r.distinguisher);
    kv("source_a", r.source_a);
    kv("source_b", r.source_b);
    kv("trials_a", std::to_string(r.trials_a));
    kv("trials_b", std::to_string(r.trials_b));
    kv("accepted_a", std::to_string(r.accepted_a));
    kv("accepted_b", std::to_string(r.accepted_b));
    kv("advantage", fixed6(r.advantage));
    kv("ci", fixed6(r.ci_halfwidth));
    kv("delta", fixed6(r.delta));
    kv("seed", std::to_string(r.seed));
    for (const auto& [k, v] : r.params) kv("param." + k, v);
    out += summary_line(r) + "\n";
    return out;
}

std::string summary_line(const DistinguisherReport& r) {
    std::string params;
    for (const auto& [k, v] : r.params) params += " " + k + "=" + v;
    return "summary dist=" + r.distinguisher + " a=" + r.source_a + " b=" + r.source_b +
           " advantage=" + fixed6(r.advantage) + " ci=" + fixed6(r.ci_halfwidth) +
           " trials=" + std::to_string(r.trials_a) + "/" + std::to_string(r.trials_b) +
           " accepted=" + std::to_string(r.accepted_a) + "/" + std::to_string(r.accepted_b) +
           " seed=" + std::to_string(r.seed) + params;
}

DistinguisherReport estimate_advantage(const Distinguisher& dist, const TupleSource& source_a,
                                       const TupleSource& source_b, std::size_t trials, std::uint64_t seed,
                                       double delta) {
    return run_advantage(dist, source_a, source_b, trials, seed, delta,
                         [](std::size_t n, std::uint64_t s, auto&& f) { return kernels::count_accepts(n, s, f); });
}

DistinguisherReport estimate_advantage_serial(const Distinguisher& dist, const TupleSource& source_a,
                                              const TupleSource& source_b, std::size_t trials,
                                              std::uint64_t seed, double delta) {
    return run_advantage(dist, source_a, source_b, trials, seed, delta, [](std::size_t n, std::uint64_t s, auto&& f) {
        return kernels::count_accepts_serial(n, s, f);
    });
}

SampleTuple randomize_to_average(const SampleTuple& tuple, const Permutation& tau) {
    SampleTuple out;
    out.samples.reserve(tuple.samples.size());
    for (const auto& s : tuple.samples) {
        Provenance prov = s.provenance;
        if (prov.pi) prov.pi = conjugate(*prov.pi, tau);
        out.samples.push_back({translate(s.state, tau, Side::kRight), std::move(prov)});
    }
    return out;
}

SampleTuple randomize_to_average(const SampleTuple& tuple, Rng& rng) {
    if (tuple.samples.empty()) return tuple;
    return randomize_to_average(tuple, random_permutation(tuple.samples.front().state.degree(), rng));
}

AttackParams AttackParams::from_polynomial(int n, int p, int k) {
    AttackParams a;
    a.k = k;
    a.p = p;
    a.tuples_per_side = formula_tuples(n, p);
    a.threshold = formula_threshold(n, p);
    return a;
}

void AttackParams::validate() const {
    if (k < 1) throw std::invalid_argument("attack: k must be at least 1");
    if (p < 1) throw std::invalid_argument("attack: p must be at least 1");
    if (tuples_per_side < 1) throw std::invalid_argument("attack: tuples_per_side must be positive");
    if (threshold < 0 || threshold >= tuples_per_side) {
        throw std::invalid_argument("attack: threshold must lie in [0, tuples_per_side)");
    }
    if (key_copies && *key_copies < 0) throw std::invalid_argument("attack: key copy count must be >= 0");
}

AttackOutcome ga_attack(const PromiseInstance& instance, const Distinguisher& dist, const AttackParams& params,
                        std::uint64_t seed) {
    params.validate();
    auto make_tuple = [&](CosetSign sign, Rng& rng) {
        SampleTuple t;
        if (params.key_copies) {
            t.samples.push_back(coset_sample(instance, sign, rng));
            for (int c = 0; c < *params.key_copies; ++c) t.samples.push_back(coset_sample(instance, CosetSign::kPlus, rng));
        } else {
            for (int c = 0; c < params.k; ++c) t.samples.push_back(coset_sample(instance, sign, rng));
        }
        return t;
    };
    auto count = [&](CosetSign sign, std::uint64_t stream_root) {
        return kernels::count_accepts(static_cast<std::size_t>(params.tuples_per_side), stream_root,
                                      [&](Rng& rng, std::size_t) {
                                          const auto states = states_of(make_tuple(sign, rng));
                                          return dist(states, rng) == kYes;
                                      });
    };
    AttackOutcome out;
    out.params = params;
    out.accepted_plus = count(CosetSign::kPlus, stream_seed(seed, 0));
    out.accepted_minus = count(CosetSign::kMinus, stream_seed(seed, 1));
    const long long diff = static_cast<long long>(out.accepted_plus) - static_cast<long long>(out.accepted_minus);
    out.yes = std::llabs(diff) >= params.threshold;
    return out;
}

AttackOutcome ga_attack(const Graph& g, const Distinguisher& dist, const AttackParams& params, std::uint64_t seed) {
    return ga_attack(PromiseInstance::verified(g), dist, params, seed);
}

Distinguisher hybrid_to_iota(Distinguisher dist, HybridVariant variant) {
    return [dist = std::move(dist), variant](std::span<const SparseState> states, Rng& rng) {
        if (uniform_below(rng, 2) == 0) return dist(states, rng);
        std::vector<SparseState> converted;
        converted.reserve(states.size());
        for (const auto& s : states) converted.push_back(phase_by_sign(s));
        const int bit = dist(converted, rng);
        return variant == HybridVariant::kComplementConverted ? 1 - bit : bit;
    };
}

Distinguisher omniscient_distinguisher(Permutation pi, int m) {
    if (m == 2 && is_fpf_involution(pi)) {
        return [pi = std::move(pi)](std::span<const SparseState> states, Rng& rng) {
            if (states.empty()) throw std::invalid_argument("distinguisher needs at least one state");
            return distinguish(states.front(), pi, rng);
        };
    }
    if (!is_cyclic_key(pi, m)) throw std::invalid_argument("omniscient distinguisher: key does not match modulus");
    return [pi = std::move(pi), m](std::span<const SparseState> states, Rng& rng) {
        if (states.empty()) throw std::invalid_argument("distinguisher needs at least one state");
        return decode_cyc(states.front(), pi, m, rng) == 0 ? kYes : kNo;
    };
}

Distinguisher coin_distinguisher() {
    return [](std::span<const SparseState>, Rng& rng) { return uniform_below(rng, 2); };
}

Distinguisher constant_distinguisher(int bit) {
    return [bit](std::span<const SparseState>, Rng&) { return bit; };
}

Distinguisher basis_measure_distinguisher() {
    return [](std::span<const SparseState> states, Rng& rng) {
        if (states.empty()) throw std::invalid_argument("distinguisher needs at least one state");
        return sign(measure_full(states.front(), rng).perm) == 0 ? kYes : kNo;
    };
}

}  // namespace qscd
