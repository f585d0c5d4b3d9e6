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
 * Permutations of {1,...,n} and the two hidden-key classes used by the
 * cryptosystem: fixed-point-free involutions (K_n) and products of n/m
 * disjoint m-cycles (K_n^m).
 *
 * Points are 0-based in the C++ API and 1-based in every text format
 * (`n: i1 i2 ... in`) and in cycle notation.
 */

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qscd/rng.h"

namespace qscd {

/// Element of S_n stored as its image array. Immutable once built.
class Permutation {
public:
    /// Identity on n points.
    static Permutation identity(int n);
    /// Validates that `image` is a bijection on {0..n-1}.
    static Permutation from_images(std::vector<int> image);
    /// 1-based cycle notation, e.g. from_cycles(6, {{1, 2}, {3, 4}, {5, 6}}).
    static Permutation from_cycles(int n, std::initializer_list<std::initializer_list<int>> cycles);
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(image_.size()); }
    int operator()(int point) const { return image_[static_cast<std::size_t>(point)]; }
    std::span<const int> images() const { return image_; }

    bool is_identity() const;
    /// Number of points moved.
    int support_size() const;
    /// 1-based cycle notation without fixed points; "()" for the identity.
    std::string cycle_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.image_ <=> b.image_;
    }

private:
    explicit Permutation(std::vector<int> image) : image_(std::move(image)) {}
    std::vector<int> image_;
};

/// (sigma tau)(i) = sigma(tau(i)).
Permutation compose(const Permutation& sigma, const Permutation& tau);
Permutation inverse(const Permutation& sigma);
/// sigma^k for k >= 0.
Permutation power(const Permutation& sigma, int k);
/// 0 for even, 1 for odd.
int sign(const Permutation& sigma);
/// tau^{-1} pi tau.
Permutation conjugate(const Permutation& pi, const Permutation& tau);
/// Multiplicative order.
int order(const Permutation& sigma);

/// pi^2 = id and pi(i) != i for all i.
bool is_fpf_involution(const Permutation& pi);
/// pi consists of exactly n/m disjoint m-cycles.
bool is_cyclic_key(const Permutation& pi, int m);

/// Uniform element of S_n.
Permutation random_permutation(int n, Rng& rng);

/// Degree plus key class; construct through `ff` or `cyc`, which validate.
struct SecurityParam {
    enum class Kind { kFF, kCyc };

    int n = 0;
    Kind kind = Kind::kFF;
    int m = 2;

    /// n must lie in {2(2n'+1)} = {2, 6, 10, ...}.
    static SecurityParam ff(int n);
    /// m >= 2 and m divides n.
    static SecurityParam cyc(int n, int m);

    friend bool operator==(const SecurityParam&, const SecurityParam&) = default;
};

/// n = 2 (mod 4).
bool in_ff_degree_set(int n);

/// Uniform over K_n: the smallest unmatched point is paired with a uniformly
/// chosen other unmatched point until every point is matched.
Permutation sample_fpf_involution(const SecurityParam& param, Rng& rng);
/// Uniform over K_n^m: a uniform shuffle of the points is cut into n/m
/// consecutive blocks and each block becomes one m-cycle.
Permutation sample_cyclic(const SecurityParam& param, Rng& rng);

/// Every element of K_n in lexicographic image order. Small n only.
std::vector<Permutation> enumerate_fpf_involutions(int n);
/// Every element of S_n in lexicographic order. Small n only.
std::vector<Permutation> enumerate_symmetric_group(int n);

/// `n: i1 i2 ... in`, 1-based.
std::string format_permutation(const Permutation& p);
/// Inverse of format_permutation. Throws std::invalid_argument on malformed
/// input or a non-bijection.
Permutation parse_permutation(std::string_view text);

}  // namespace qscd
