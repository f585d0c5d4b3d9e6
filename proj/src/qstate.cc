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

#include "qscd/qstate.h"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qscd {

namespace {

void require_degree(const SparseState& state, const Permutation& p, const char* what) {
    if (state.degree() != p.degree()) {
        throw std::invalid_argument(std::string(what) + ": degree mismatch");
    }
}

Amplitude root_of_unity(int m, long long k) {
    const long long r = ((k % m) + m) % m;
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(m));
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// Picks the index whose cumulative weight first exceeds u * total.
template <typename Weights>
std::size_t sample_index(const Weights& weights, Rng& rng) {
    double total = 0.0;
    for (double w : weights) total += w;
    const double target = uniform_unit(rng) * total;
    double running = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        if (weights[k] <= 0.0) continue;
        last_positive = k;
        running += weights[k];
        if (target < running) return k;
    }
    return last_positive;
}

}  // namespace

SparseState::SparseState(int n, int m) : n_(n), m_(m) {
    if (n < 1) throw std::invalid_argument("state degree must be positive");
    if (m < 1) throw std::invalid_argument("control modulus must be positive");
}

Amplitude SparseState::amplitude(int control, const Permutation& perm) const {
    auto it = amps_.find(BasisVector{control, perm});
    return it == amps_.end() ? Amplitude{} : it->second;
}

double SparseState::norm() const {
    double sum = 0.0;
    for (const auto& [basis, amp] : amps_) sum += std::norm(amp);
    return std::sqrt(sum);
}

void SparseState::accumulate(int control, const Permutation& perm, Amplitude amp) {
    if (control < 0 || control >= m_) throw std::out_of_range("control value out of range");
    if (perm.degree() != n_) throw std::invalid_argument("basis permutation degree mismatch");
    auto [it, inserted] = amps_.try_emplace(BasisVector{control, perm}, amp);
    if (!inserted) it->second += amp;
    if (std::abs(it->second) < kPruneThreshold) amps_.erase(it);
}

SparseState basis_state(int control, const Permutation& sigma, int m) {
    if (m < 1 || control < 0 || control >= m) {
        throw std::out_of_range("basis_state: control out of range");
    }
    SparseState out(sigma.degree(), m);
    out.accumulate(control, sigma, 1.0);
    return out;
}

SparseState superposition(int n, const std::vector<std::pair<Permutation, Amplitude>>& terms) {
    SparseState out(n, 1);
    for (const auto& [perm, amp] : terms) out.accumulate(0, perm, amp);
    return out;
}

SparseState fourier_control(const SparseState& state, FourierDirection direction) {
    const int m = state.modulus();
    if (m < 2) throw std::invalid_argument("fourier_control needs a control register (m >= 2)");
    const int sgn = direction == FourierDirection::kForward ? 1 : -1;
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    SparseState out(state.degree(), m);
    for (const auto& [basis, amp] : state.amplitudes()) {
        for (int r = 0; r < m; ++r) {
            const long long k = static_cast<long long>(sgn) * basis.control * r;
            out.accumulate(r, basis.perm, amp * scale * root_of_unity(m, k));
        }
    }
    return out;
}

SparseState controlled_power(const SparseState& state, const Permutation& pi) {
    require_degree(state, pi, "controlled_power");
    std::vector<Permutation> powers;
    powers.reserve(static_cast<std::size_t>(state.modulus()));
    powers.push_back(Permutation::identity(pi.degree()));
    for (int r = 1; r < state.modulus(); ++r) powers.push_back(compose(powers.back(), pi));
    SparseState out(state.degree(), state.modulus());
    for (const auto& [basis, amp] : state.amplitudes()) {
        out.accumulate(basis.control, compose(basis.perm, powers[static_cast<std::size_t>(basis.control)]), amp);
    }
    return out;
}

SparseState phase_by_sign(const SparseState& state) {
    SparseState out(state.degree(), state.modulus());
    for (const auto& [basis, amp] : state.amplitudes()) {
        out.accumulate(basis.control, basis.perm, sign(basis.perm) ? -amp : amp);
    }
    return out;
}

SparseState translate(const SparseState& state, const Permutation& tau, Side side) {
    require_degree(state, tau, "translate");
    SparseState out(state.degree(), state.modulus());
    for (const auto& [basis, amp] : state.amplitudes()) {
        out.accumulate(basis.control,
                       side == Side::kLeft ? compose(tau, basis.perm) : compose(basis.perm, tau), amp);
    }
    return out;
}

SparseState decrement_control_where(const SparseState& state, const Permutation& target) {
    require_degree(state, target, "decrement_control_where");
    const int m = state.modulus();
    SparseState out(state.degree(), m);
    for (const auto& [basis, amp] : state.amplitudes()) {
        const int control = basis.perm == target ? (basis.control + m - 1) % m : basis.control;
        out.accumulate(control, basis.perm, amp);
    }
    return out;
}

SparseState attach_control(const SparseState& state, int m) {
    if (state.modulus() != 1) throw std::invalid_argument("attach_control: state already has a control register");
    SparseState out(state.degree(), m);
    for (const auto& [basis, amp] : state.amplitudes()) out.accumulate(0, basis.perm, amp);
    return out;
}

SparseState detach_control(const SparseState& state) {
    SparseState out(state.degree(), 1);
    for (const auto& [basis, amp] : state.amplitudes()) {
        if (basis.control != 0) {
            throw std::logic_error("detach_control: control register is entangled or nonzero");
        }
        out.accumulate(0, basis.perm, amp);
    }
    return out;
}

std::vector<double> control_distribution(const SparseState& state) {
    std::vector<double> probs(static_cast<std::size_t>(state.modulus()), 0.0);
    for (const auto& [basis, amp] : state.amplitudes()) {
        probs[static_cast<std::size_t>(basis.control)] += std::norm(amp);
    }
    return probs;
}

ControlMeasurement measure_control(const SparseState& state, Rng& rng) {
    const auto probs = control_distribution(state);
    const int outcome = static_cast<int>(sample_index(probs, rng));
    const double scale = 1.0 / std::sqrt(probs[static_cast<std::size_t>(outcome)]);
    SparseState collapsed(state.degree(), state.modulus());
    for (const auto& [basis, amp] : state.amplitudes()) {
        if (basis.control == outcome) collapsed.accumulate(basis.control, basis.perm, amp * scale);
    }
    return {outcome, std::move(collapsed)};
}

FullMeasurement measure_full(const SparseState& state, Rng& rng) {
    std::vector<double> weights;
    std::vector<const BasisVector*> keys;
    weights.reserve(state.support_size());
    keys.reserve(state.support_size());
    for (const auto& [basis, amp] : state.amplitudes()) {
        weights.push_back(std::norm(amp));
        keys.push_back(&basis);
    }
    if (keys.empty()) throw std::logic_error("measure_full on the zero vector");
    const auto& hit = *keys[sample_index(weights, rng)];
    return {hit.control, hit.perm};
}

Amplitude inner_product(const SparseState& a, const SparseState& b) {
    Amplitude sum{};
    for (const auto& [basis, amp] : a.amplitudes()) {
        auto it = b.amplitudes().find(basis);
        if (it != b.amplitudes().end()) sum += std::conj(amp) * it->second;
    }
    return sum;
}

bool states_equal(const SparseState& a, const SparseState& b, bool up_to_global_phase) {
    if (a.degree() != b.degree() || a.modulus() != b.modulus()) return false;
    Amplitude phase = 1.0;
    if (up_to_global_phase) {
        const Amplitude overlap = inner_product(b, a);
        if (std::abs(overlap) < kAmplitudeTolerance) return a.norm() < kAmplitudeTolerance && b.norm() < kAmplitudeTolerance;
        phase = overlap / std::abs(overlap);
    }
    // b * phase should match a entrywise
    for (const auto& [basis, amp] : a.amplitudes()) {
        if (std::abs(amp - b.amplitude(basis.control, basis.perm) * phase) > kAmplitudeTolerance) return false;
    }
    for (const auto& [basis, amp] : b.amplitudes()) {
        if (std::abs(amp * phase - a.amplitude(basis.control, basis.perm)) > kAmplitudeTolerance) return false;
    }
    return true;
}

std::string serialize_state(const SparseState& state) {
    std::string out = "QSTATE " + std::to_string(state.degree()) + " " +
                      std::to_string(state.modulus()) + " " + std::to_string(state.support_size()) + "\n";
    for (const auto& [basis, amp] : state.amplitudes()) {
        out += std::to_string(basis.control) + " " + format_double(amp.real()) + " " +
               format_double(amp.imag()) + " " + format_permutation(basis.perm) + "\n";
    }
    return out;
}

SparseState parse_state(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty state text");
    std::istringstream header(line);
    std::string tag;
    int n = 0, m = 0;
    long long entries = -1;
    if (!(header >> tag >> n >> m >> entries) || tag != "QSTATE" || entries < 0) {
        throw std::invalid_argument("bad QSTATE header");
    }
    SparseState out(n, m);
    for (long long k = 0; k < entries; ++k) {
        if (!std::getline(in, line)) throw std::invalid_argument("truncated QSTATE body");
        std::istringstream row(line);
        int control = 0;
        std::string re, im;
        if (!(row >> control >> re >> im)) throw std::invalid_argument("bad QSTATE entry");
        if (control < 0 || control >= m) throw std::invalid_argument("QSTATE control out of range");
        std::string rest;
        std::getline(row, rest);
        const Permutation perm = parse_permutation(rest);
        if (perm.degree() != n) throw std::invalid_argument("QSTATE entry degree mismatch");
        std::size_t used_re = 0, used_im = 0;
        const double x = std::stod(re, &used_re);
        const double y = std::stod(im, &used_im);
        if (used_re != re.size() || used_im != im.size()) throw std::invalid_argument("bad QSTATE amplitude");
        if (out.amplitude(control, perm) != Amplitude{}) throw std::invalid_argument("duplicate QSTATE entry");
        out.accumulate(control, perm, Amplitude(x, y));
    }
    return out;
}

}  // namespace qscd
