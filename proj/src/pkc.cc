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


#include "qscd/pkc.h"

#include <sstream>
#include <utility>

namespace qscd {

namespace {

void require_mode(const SecurityParam& expected, const SecurityParam& got, const char* what) {
    if (!(expected == got)) {
        throw ModeMismatch(std::string(what) + ": expected " + format_mode_line(expected) + ", got " +
                           format_mode_line(got));
    }
}

std::pair<std::string_view, std::string_view> split_first_line(std::string_view text) {
    const auto nl = text.find('\n');
    if (nl == std::string_view::npos) return {text, {}};
    return {text.substr(0, nl), text.substr(nl + 1)};
}

}  // namespace

void KeyPair::validate() const {
    if (secret.degree() != params.n) throw std::invalid_argument("key: secret degree does not match n");
    if (is_ff()) {
        if (!in_ff_degree_set(params.n) || !is_fpf_involution(secret)) {
            throw std::invalid_argument("key: FF secret must be a fixed-point-free involution with n = 2 mod 4");
        }
    } else if (!is_cyclic_key(secret, params.m)) {
        throw std::invalid_argument("key: CYC secret must be a product of n/m disjoint m-cycles");
    }
}

KeyPair keygen(const SecurityParam& params, Rng& rng) {
    const SecurityParam checked =
        params.kind == SecurityParam::Kind::kFF ? SecurityParam::ff(params.n) : SecurityParam::cyc(params.n, params.m);
    KeyPair kp{checked.kind == SecurityParam::Kind::kFF ? sample_fpf_involution(checked, rng)
                                                         : sample_cyclic(checked, rng),
               checked};
    return kp;
}

KeyCopy::KeyCopy(PureSample sample, SecurityParam params) : sample_(std::move(sample)), params_(params) {}

const PureSample& KeyCopy::peek() const {
    if (!sample_) throw ConsumedKeyError("key copy already consumed");
    return *sample_;
}

PureSample KeyCopy::take() {
    if (!sample_) throw ConsumedKeyError("key copy already consumed");
    PureSample out = std::move(*sample_);
    sample_.reset();
    return out;
}

KeyCopy issue_key_copy(const KeyPair& kp, std::optional<int> symbol, Rng& rng) {
    if (kp.is_ff()) return KeyCopy(gen_plus(kp.secret, rng), kp.params);
    if (!symbol) throw std::invalid_argument("issue_key_copy: CYC mode needs a symbol");
    if (*symbol < 0 || *symbol >= kp.params.m) throw std::out_of_range("issue_key_copy: symbol outside Z_m");
    return KeyCopy(gen_cyc(kp.secret, kp.params.m, *symbol, rng), kp.params);
}

KeySeries KeySeries::issue(const KeyPair& kp, Rng& rng) {
    if (kp.is_ff()) throw ModeMismatch("KeySeries: FF keys have no series");
    KeySeries series;
    series.copies_.reserve(static_cast<std::size_t>(kp.params.m));
    for (int s = 0; s < kp.params.m; ++s) series.copies_.push_back(issue_key_copy(kp, s, rng));
    return series;
}

KeyCopy& KeySeries::at(int symbol) {
    if (symbol < 0 || symbol >= modulus()) throw std::out_of_range("KeySeries: symbol outside Z_m");
    return copies_[static_cast<std::size_t>(symbol)];
}

const KeyCopy& KeySeries::at(int symbol) const {
    if (symbol < 0 || symbol >= modulus()) throw std::out_of_range("KeySeries: symbol outside Z_m");
    return copies_[static_cast<std::size_t>(symbol)];
}

Ciphertext encrypt_ff(int bit, KeyCopy& key_copy) {
    if (bit != 0 && bit != 1) throw std::invalid_argument("encrypt_ff: bit must be 0 or 1");
    if (key_copy.params().kind != SecurityParam::Kind::kFF) throw ModeMismatch("encrypt_ff: not an FF key copy");
    PureSample sample = key_copy.take();
    if (bit == 1) sample = convert(sample);
    return {std::move(sample.state), key_copy.params()};
}

Ciphertext encrypt_cyc(int symbol, KeySeries& series) {
    if (symbol < 0 || symbol >= series.modulus()) throw std::out_of_range("encrypt_cyc: symbol outside Z_m");
    for (int s = 0; s < series.modulus(); ++s) {
        if (series.at(s).consumed()) throw ConsumedKeyError("encrypt_cyc: series already used");
    }
    const SecurityParam params = series.at(symbol).params();
    PureSample chosen = series.at(symbol).take();
    for (int s = 0; s < series.modulus(); ++s) {
        if (s != symbol) series.at(s).take();
    }
    return {std::move(chosen.state), params};
}

std::vector<double> decrypt_distribution(const KeyPair& kp, const Ciphertext& c) {
    require_mode(kp.params, c.params, "decrypt");
    if (kp.is_ff()) {
        // Outcome 0 (YES) is the plus state, plaintext 0.
        const auto probs = distinguish_probabilities(c.state, kp.secret);
        return {probs[0], probs[1]};
    }
    return decode_distribution(c.state, kp.secret, kp.params.m);
}

int decrypt(const KeyPair& kp, const Ciphertext& c, Rng& rng) {
    require_mode(kp.params, c.params, "decrypt");
    if (kp.is_ff()) return distinguish(c.state, kp.secret, rng) == kYes ? 0 : 1;
    return decode_cyc(c.state, kp.secret, kp.params.m, rng);
}

std::vector<SparseState> AdversaryView::states() const {
    std::vector<SparseState> out;
    out.reserve(key_copies.size() + 1);
    out.push_back(challenge.state);
    for (const auto& k : key_copies) out.push_back(k.state);
    return out;
}

AdversaryView adversary_view(const KeyPair& kp, const Ciphertext& c, int l, Rng& rng) {
    if (l < 0) throw std::invalid_argument("adversary_view: l must be >= 0");
    require_mode(kp.params, c.params, "adversary_view");
    AdversaryView view{c, {}};
    view.key_copies.reserve(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) {
        KeyCopy copy = issue_key_copy(kp, kp.is_ff() ? std::nullopt : std::optional<int>(0), rng);
        view.key_copies.push_back(copy.take());
    }
    return view;
}

std::string format_mode_line(const SecurityParam& params) {
    if (params.kind == SecurityParam::Kind::kFF) return "FF " + std::to_string(params.n);
    return "CYC " + std::to_string(params.n) + " " + std::to_string(params.m);
}

SecurityParam parse_mode_line(std::string_view line) {
    std::istringstream in{std::string(line)};
    std::string tag;
    int n = 0;
    int m = 0;
    if (!(in >> tag >> n)) throw std::invalid_argument("mode line: expected `FF n` or `CYC n m`");
    SecurityParam params;
    if (tag == "FF") {
        params = SecurityParam::ff(n);
    } else if (tag == "CYC") {
        if (!(in >> m)) throw std::invalid_argument("mode line: CYC needs m");
        params = SecurityParam::cyc(n, m);
    } else {
        throw std::invalid_argument("mode line: unknown mode `" + tag + "`");
    }
    std::string extra;
    if (in >> extra) throw std::invalid_argument("mode line: trailing data");
    return params;
}

std::string format_key(const KeyPair& kp) { return format_mode_line(kp.params) + "\n" + format_permutation(kp.secret) + "\n"; }

KeyPair parse_key(std::string_view text) {
    const auto [mode, rest] = split_first_line(text);
    KeyPair kp{parse_permutation(rest), parse_mode_line(mode)};
    kp.validate();
    return kp;
}

std::string format_ciphertext(const Ciphertext& c) { return format_mode_line(c.params) + "\n" + serialize_state(c.state); }

Ciphertext parse_ciphertext(std::string_view text) {
    const auto [mode, rest] = split_first_line(text);
    Ciphertext c{parse_state(rest), parse_mode_line(mode)};
    if (c.state.degree() != c.params.n || c.state.modulus() != 1) {
        throw std::invalid_argument("ciphertext: state does not match the mode line");
    }
    return c;
}

}  // namespace qscd
