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
 * Single-bit (FF) and multi-symbol (CYC) public-key encryption over the
 * coset-state primitives.
 *
 * Key copies are single-use: encrypting with a copy consumes it, and a
 * second use throws ConsumedKeyError. Copying a KeyCopy is disabled.
 *
 * File formats:
 *   key        : mode line (`FF n` or `CYC n m`), then the permutation line.
 *   ciphertext : mode line, then the QSTATE serialization.
 */

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qscd/perm.h"
#include "qscd/qscdcyc.h"
#include "qscd/qscdff.h"
#include "qscd/qstate.h"
#include "qscd/rng.h"

namespace qscd {

class ConsumedKeyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ModeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct KeyPair {
    Permutation secret;
    SecurityParam params;

    bool is_ff() const { return params.kind == SecurityParam::Kind::kFF; }
    /// Throws if the secret is not in K_n (FF) or K_n^m (CYC).
    void validate() const;
};

KeyPair keygen(const SecurityParam& params, Rng& rng);

/// One encryption-key state. Move-only.
class KeyCopy {
public:
    KeyCopy(PureSample sample, SecurityParam params);
    KeyCopy(const KeyCopy&) = delete;
    KeyCopy& operator=(const KeyCopy&) = delete;
    KeyCopy(KeyCopy&&) noexcept = default;
    KeyCopy& operator=(KeyCopy&&) noexcept = default;

    bool consumed() const { return !sample_.has_value(); }
    const SecurityParam& params() const { return params_; }
    /// Read-only access for adversaries and tests. Throws if consumed.
    const PureSample& peek() const;
    /// Hands the state out and marks the copy consumed.
    PureSample take();

private:
    std::optional<PureSample> sample_;
    SecurityParam params_;
};

/// FF ignores `symbol`; CYC requires symbol in [0, m).
KeyCopy issue_key_copy(const KeyPair& kp, std::optional<int> symbol, Rng& rng);

/// The CYC series (rho^(0), ..., rho^(m-1)), issued once per message.
class KeySeries {
public:
    static KeySeries issue(const KeyPair& kp, Rng& rng);

    int modulus() const { return static_cast<int>(copies_.size()); }
    KeyCopy& at(int symbol);
    const KeyCopy& at(int symbol) const;

private:
    std::vector<KeyCopy> copies_;
};

struct Ciphertext {
    SparseState state;
    SecurityParam params;
};

Ciphertext encrypt_ff(int bit, KeyCopy& key_copy);
/// Takes copy s; every other copy in the series is consumed as well.
Ciphertext encrypt_cyc(int symbol, KeySeries& series);

/// Bit for FF, symbol for CYC. Throws ModeMismatch when the ciphertext was
/// produced under other parameters.
int decrypt(const KeyPair& kp, const Ciphertext& c, Rng& rng);
/// Exact probability of each plaintext value.
std::vector<double> decrypt_distribution(const KeyPair& kp, const Ciphertext& c);

struct AdversaryView {
    Ciphertext challenge;
    std::vector<PureSample> key_copies;

    /// Challenge first, then the key copies.
    std::vector<SparseState> states() const;
};

/// Packages the challenge with l fresh key copies (symbol 0 copies for CYC).
AdversaryView adversary_view(const KeyPair& kp, const Ciphertext& c, int l, Rng& rng);

std::string format_mode_line(const SecurityParam& params);
SecurityParam parse_mode_line(std::string_view line);

std::string format_key(const KeyPair& kp);
KeyPair parse_key(std::string_view text);
std::string format_ciphertext(const Ciphertext& c);
Ciphertext parse_ciphertext(std::string_view text);

}  // namespace qscd
