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

#include "qscd/perm.h"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qscd {

namespace {

void require_same_degree(const Permutation& a, const Permutation& b, const char* what) {
    if (a.degree() != b.degree()) {
        throw std::invalid_argument(std::string(what) + ": degree mismatch (" +
                                    std::to_string(a.degree()) + " vs " +
                                    std::to_string(b.degree()) + ")");
    }
}

}  // namespace

Permutation Permutation::identity(int n) {
    if (n < 1) throw std::invalid_argument("permutation degree must be positive");
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    return Permutation(std::move(image));
}

Permutation Permutation::from_images(std::vector<int> image) {
    const int n = static_cast<int>(image.size());
    if (n < 1) throw std::invalid_argument("permutation degree must be positive");
    std::vector<bool> seen(image.size(), false);
    for (int x : image) {
        if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)]) {
            throw std::invalid_argument("image array is not a bijection");
        }
        seen[static_cast<std::size_t>(x)] = true;
    }
    return Permutation(std::move(image));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (const auto& cycle : cycles) {
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            const int from = cycle[k] - 1;
            const int to = cycle[(k + 1) % cycle.size()] - 1;
            if (from < 0 || from >= n || to < 0 || to >= n) {
                throw std::invalid_argument("cycle point out of range");
            }
            if (used[static_cast<std::size_t>(from)]) {
                throw std::invalid_argument("cycles are not disjoint");
            }
            used[static_cast<std::size_t>(from)] = true;
            image[static_cast<std::size_t>(from)] = to;
        }
    }
    return from_images(std::move(image));
}

Permutation Permutation::from_cycles(int n, std::initializer_list<std::initializer_list<int>> cycles) {
    std::vector<std::vector<int>> list;
    for (const auto& c : cycles) list.emplace_back(c);
    return from_cycles(n, list);
}

bool Permutation::is_identity() const { return support_size() == 0; }

int Permutation::support_size() const {
    int moved = 0;
    for (int i = 0; i < degree(); ++i) moved += (image_[static_cast<std::size_t>(i)] != i);
    return moved;
}

std::string Permutation::cycle_string() const {
    std::string out;
    std::vector<bool> seen(image_.size(), false);
    for (int start = 0; start < degree(); ++start) {
        if (seen[static_cast<std::size_t>(start)] || (*this)(start) == start) continue;
        out += '(';
        int x = start;
        bool first = true;
        while (!seen[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = true;
            if (!first) out += ' ';
            out += std::to_string(x + 1);
            first = false;
            x = (*this)(x);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
    require_same_degree(sigma, tau, "compose");
    std::vector<int> image(static_cast<std::size_t>(sigma.degree()));
    for (int i = 0; i < sigma.degree(); ++i) image[static_cast<std::size_t>(i)] = sigma(tau(i));
    return Permutation::from_images(std::move(image));
}

Permutation inverse(const Permutation& sigma) {
    std::vector<int> image(static_cast<std::size_t>(sigma.degree()));
    for (int i = 0; i < sigma.degree(); ++i) image[static_cast<std::size_t>(sigma(i))] = i;
    return Permutation::from_images(std::move(image));
}

Permutation power(const Permutation& sigma, int k) {
    if (k < 0) throw std::invalid_argument("power: negative exponent");
    Permutation result = Permutation::identity(sigma.degree());
    for (int t = 0; t < k; ++t) result = compose(result, sigma);
    return result;
}

int sign(const Permutation& sigma) {
    // parity = (n - number of cycles) mod 2
    std::vector<bool> seen(static_cast<std::size_t>(sigma.degree()), false);
    int cycles = 0;
    for (int start = 0; start < sigma.degree(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        ++cycles;
        for (int x = start; !seen[static_cast<std::size_t>(x)]; x = sigma(x)) {
            seen[static_cast<std::size_t>(x)] = true;
        }
    }
    return (sigma.degree() - cycles) & 1;
}

Permutation conjugate(const Permutation& pi, const Permutation& tau) {
    require_same_degree(pi, tau, "conjugate");
    return compose(compose(inverse(tau), pi), tau);
}

int order(const Permutation& sigma) {
    std::vector<bool> seen(static_cast<std::size_t>(sigma.degree()), false);
    long long result = 1;
    for (int start = 0; start < sigma.degree(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        long long length = 0;
        for (int x = start; !seen[static_cast<std::size_t>(x)]; x = sigma(x)) {
            seen[static_cast<std::size_t>(x)] = true;
            ++length;
        }
        result = std::lcm(result, length);
    }
    return static_cast<int>(result);
}

bool is_fpf_involution(const Permutation& pi) { return is_cyclic_key(pi, 2); }

bool is_cyclic_key(const Permutation& pi, int m) {
    if (m < 2 || pi.degree() % m != 0) return false;
    std::vector<bool> seen(static_cast<std::size_t>(pi.degree()), false);
    for (int start = 0; start < pi.degree(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        int length = 0;
        for (int x = start; !seen[static_cast<std::size_t>(x)]; x = pi(x)) {
            seen[static_cast<std::size_t>(x)] = true;
            ++length;
        }
        if (length != m) return false;
    }
    return true;
}

Permutation random_permutation(int n, Rng& rng) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    std::shuffle(image.begin(), image.end(), rng);
    return Permutation::from_images(std::move(image));
}

bool in_ff_degree_set(int n) { return n >= 2 && n % 4 == 2; }

SecurityParam SecurityParam::ff(int n) {
    if (!in_ff_degree_set(n)) {
        throw std::invalid_argument("FF degree must satisfy n = 2 (mod 4), got " + std::to_string(n));
    }
    return SecurityParam{n, Kind::kFF, 2};
}

SecurityParam SecurityParam::cyc(int n, int m) {
    if (n < 1 || m < 2 || n % m != 0) {
        throw std::invalid_argument("CYC parameters need m >= 2 dividing n, got n=" +
                                    std::to_string(n) + " m=" + std::to_string(m));
    }
    return SecurityParam{n, Kind::kCyc, m};
}

Permutation sample_fpf_involution(const SecurityParam& param, Rng& rng) {
    if (param.kind != SecurityParam::Kind::kFF || !in_ff_degree_set(param.n)) {
        throw std::invalid_argument("sample_fpf_involution needs a valid FF parameter");
    }
    std::vector<int> unmatched(static_cast<std::size_t>(param.n));
    std::iota(unmatched.begin(), unmatched.end(), 0);
    std::vector<int> image(static_cast<std::size_t>(param.n));
    while (!unmatched.empty()) {
        const int a = unmatched.front();
        const int pick = 1 + uniform_below(rng, static_cast<int>(unmatched.size()) - 1);
        const int b = unmatched[static_cast<std::size_t>(pick)];
        image[static_cast<std::size_t>(a)] = b;
        image[static_cast<std::size_t>(b)] = a;
        unmatched.erase(unmatched.begin() + pick);
        unmatched.erase(unmatched.begin());
    }
    return Permutation::from_images(std::move(image));
}

Permutation sample_cyclic(const SecurityParam& param, Rng& rng) {
    if (param.kind != SecurityParam::Kind::kCyc || param.m < 2 || param.n % param.m != 0) {
        throw std::invalid_argument("sample_cyclic needs a valid CYC parameter");
    }
    std::vector<int> order(static_cast<std::size_t>(param.n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> image(static_cast<std::size_t>(param.n));
    for (int block = 0; block < param.n; block += param.m) {
        for (int k = 0; k < param.m; ++k) {
            const int from = order[static_cast<std::size_t>(block + k)];
            const int to = order[static_cast<std::size_t>(block + (k + 1) % param.m)];
            image[static_cast<std::size_t>(from)] = to;
        }
    }
    return Permutation::from_images(std::move(image));
}

std::vector<Permutation> enumerate_symmetric_group(int n) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_images(image));
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
}

std::vector<Permutation> enumerate_fpf_involutions(int n) {
    std::vector<Permutation> out;
    for (auto& p : enumerate_symmetric_group(n)) {
        if (is_fpf_involution(p)) out.push_back(std::move(p));
    }
    return out;
}

std::string format_permutation(const Permutation& p) {
    std::string out = std::to_string(p.degree()) + ":";
    for (int x : p.images()) out += " " + std::to_string(x + 1);
    return out;
}

Permutation parse_permutation(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("permutation text lacks ':'");
    std::istringstream head{std::string(text.substr(0, colon))};
    int n = 0;
    if (!(head >> n) || n < 1) throw std::invalid_argument("bad permutation degree");
    std::string trailing;
    if (head >> trailing) throw std::invalid_argument("junk before ':' in permutation text");
    std::istringstream body{std::string(text.substr(colon + 1))};
    std::vector<int> image;
    int x = 0;
    while (body >> x) image.push_back(x - 1);
    if (!body.eof()) throw std::invalid_argument("non-numeric permutation entry");
    if (static_cast<int>(image.size()) != n) {
        throw std::invalid_argument("permutation has " + std::to_string(image.size()) +
                                    " entries, expected " + std::to_string(n));
    }
    return Permutation::from_images(std::move(image));
}

}  // namespace qscd
