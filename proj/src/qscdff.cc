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

#include "qscd/qscdff.h"

#include <stdexcept>

namespace qscd {

namespace {

void require_ff_key(const Permutation& pi, const char* what) {
    if (!is_fpf_involution(pi)) {
        throw std::invalid_argument(std::string(what) + ": permutation " + pi.cycle_string() +
                                    " is not a fixed-point-free involution");
    }
    // An even key would make the plus and minus states coincide.
    if (!in_ff_degree_set(pi.degree())) {
        throw std::invalid_argument(std::string(what) + ": degree " + std::to_string(pi.degree()) +
                                    " is not 2 mod 4");
    }
}

SparseState run_controlled_test(const SparseState& state, const Permutation& pi) {
    if (state.modulus() != 1) throw std::invalid_argument("controlled-pi test expects a control-free state");
    SparseState s = attach_control(state, 2);
    s = fourier_control(s, FourierDirection::kForward);
    s = controlled_power(s, pi);
    return fourier_control(s, FourierDirection::kForward);
}

}  // namespace

std::string to_string(Provenance::Kind kind) {
    switch (kind) {
        case Provenance::Kind::kPlus: return "plus";
        case Provenance::Kind::kMinus: return "minus";
        case Provenance::Kind::kIota: return "iota";
        case Provenance::Kind::kPhi: return "phi";
    }
    return "?";
}

std::vector<SparseState> states_of(const SampleTuple& tuple) {
    std::vector<SparseState> out;
    out.reserve(tuple.samples.size());
    for (const auto& s : tuple.samples) out.push_back(s.state);
    return out;
}

PureSample gen_plus_at(const Permutation& pi, const Permutation& sigma) {
    require_ff_key(pi, "gen_plus");
    if (sigma.degree() != pi.degree()) throw std::invalid_argument("gen_plus: degree mismatch");
    const int n = pi.degree();
    SparseState s = basis_state(0, Permutation::identity(n), 2);
    s = fourier_control(s, FourierDirection::kForward);
    s = controlled_power(s, pi);
    s = decrement_control_where(s, pi);
    s = translate(s, sigma, Side::kLeft);
    return {detach_control(s), {Provenance::Kind::kPlus, pi, 0}};
}

PureSample gen_plus(const Permutation& pi, Rng& rng) {
    return gen_plus_at(pi, random_permutation(pi.degree(), rng));
}

PureSample gen_iota(int n, Rng& rng) {
    return {basis_state(0, random_permutation(n, rng), 1), {Provenance::Kind::kIota, std::nullopt, 0}};
}

PureSample convert(const PureSample& sample) {
    PureSample out{phase_by_sign(sample.state), sample.provenance};
    auto& kind = out.provenance.kind;
    if (kind == Provenance::Kind::kPlus) {
        kind = Provenance::Kind::kMinus;
    } else if (kind == Provenance::Kind::kMinus) {
        kind = Provenance::Kind::kPlus;
    }
    return out;
}

std::array<double, 2> distinguish_probabilities(const SparseState& state, const Permutation& pi) {
    require_ff_key(pi, "distinguish");
    const auto probs = control_distribution(run_controlled_test(state, pi));
    return {probs[0], probs[1]};
}

int distinguish(const SparseState& state, const Permutation& pi, Rng& rng) {
    require_ff_key(pi, "distinguish");
    const auto measured = measure_control(run_controlled_test(state, pi), rng);
    return measured.outcome == 0 ? kYes : kNo;
}

int distinguish(const PureSample& sample, const Permutation& pi, Rng& rng) {
    return distinguish(sample.state, pi, rng);
}

SampleTuple plus_tuple(const Permutation& pi, int k, Rng& rng) {
    SampleTuple t;
    for (int i = 0; i < k; ++i) t.samples.push_back(gen_plus(pi, rng));
    return t;
}

SampleTuple minus_tuple(const Permutation& pi, int k, Rng& rng) {
    SampleTuple t;
    for (int i = 0; i < k; ++i) t.samples.push_back(convert(gen_plus(pi, rng)));
    return t;
}

SampleTuple iota_tuple(int n, int k, Rng& rng) {
    SampleTuple t;
    for (int i = 0; i < k; ++i) t.samples.push_back(gen_iota(n, rng));
    return t;
}

}  // namespace qscd
