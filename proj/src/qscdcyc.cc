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

#include "qscd/qscdcyc.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qscd {

namespace {

void require_cyclic_key(const Permutation& pi, int m, const char* what) {
    if (!is_cyclic_key(pi, m)) {
        throw std::invalid_argument(std::string(what) + ": " + pi.cycle_string() +
                                    " is not a product of disjoint " + std::to_string(m) + "-cycles");
    }
}

SparseState run_generalized_test(const SparseState& state, const Permutation& pi, int m) {
    if (state.modulus() != 1) throw std::invalid_argument("decode_cyc expects a control-free state");
    if (state.degree() != pi.degree()) throw std::invalid_argument("decode_cyc: degree mismatch");
    SparseState s = attach_control(state, m);
    s = fourier_control(s, FourierDirection::kInverse);
    s = controlled_power(s, pi);
    return fourier_control(s, FourierDirection::kForward);
}

}  // namespace

SparseState cyclic_fourier_basis(const Permutation& pi, int m, int k) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    SparseState out(pi.degree(), 1);
    Permutation pt = Permutation::identity(pi.degree());
    for (int t = 0; t < m; ++t) {
        const long long e = (static_cast<long long>(k) * t) % m;
        out.accumulate(0, pt, std::polar(scale, 2.0 * std::numbers::pi * static_cast<double>(e) / m));
        pt = compose(pt, pi);
    }
    return out;
}

CyclicSample gen_cyc_at(const Permutation& pi, int m, int s, const Permutation& sigma) {
    require_cyclic_key(pi, m, "gen_cyc");
    if (s < 0 || s >= m) throw std::out_of_range("gen_cyc: symbol out of range");
    if (sigma.degree() != pi.degree()) throw std::invalid_argument("gen_cyc: degree mismatch");
    SparseState state = translate(cyclic_fourier_basis(pi, m, s), sigma, Side::kLeft);
    return {std::move(state), {Provenance::Kind::kPhi, pi, s}};
}

CyclicSample gen_cyc(const Permutation& pi, int m, int s, Rng& rng) {
    return gen_cyc_at(pi, m, s, random_permutation(pi.degree(), rng));
}

std::vector<double> decode_distribution(const SparseState& state, const Permutation& pi, int m) {
    require_cyclic_key(pi, m, "decode_cyc");
    return control_distribution(run_generalized_test(state, pi, m));
}

int decode_cyc(const SparseState& state, const Permutation& pi, int m, Rng& rng) {
    require_cyclic_key(pi, m, "decode_cyc");
    return measure_control(run_generalized_test(state, pi, m), rng).outcome;
}

}  // namespace qscd
