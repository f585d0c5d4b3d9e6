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

#include "qscd/graphauto.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>

namespace qscd {

// ---------------------------------------------------------------------------
// Automorphism search

namespace {

using Coloring = std::vector<int>;

class Refiner {
public:
    explicit Refiner(const Graph& g) : adj_(g.adjacency()) {}

    std::size_t size() const { return adj_.size(); }
    const std::vector<int>& neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    // Colour refinement to the coarsest stable partition. New colours are the
    // ranks of (old colour, sorted neighbour colours) signatures, so two
    // isomorphic coloured graphs get identical colour names.
    Coloring refine(Coloring colors) const {
        const std::size_t n = adj_.size();
        int classes = count_classes(colors);
        std::vector<std::vector<int>> sigs(n);
        for (;;) {
            for (std::size_t v = 0; v < n; ++v) {
                auto& s = sigs[v];
                s.clear();
                s.push_back(colors[v]);
                for (int w : adj_[v]) s.push_back(colors[static_cast<std::size_t>(w)]);
                std::sort(s.begin() + 1, s.end());
            }
            std::vector<const std::vector<int>*> order(n);
            for (std::size_t v = 0; v < n; ++v) order[v] = &sigs[v];
            std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return *a < *b; });
            std::map<std::vector<int>, int> rank;
            int next = 0;
            for (auto* s : order) {
                if (rank.try_emplace(*s, next).second) ++next;
            }
            Coloring updated(n);
            for (std::size_t v = 0; v < n; ++v) updated[v] = rank.at(sigs[v]);
            colors = std::move(updated);
            if (next == classes) return colors;
            classes = next;
        }
    }

    static int count_classes(const Coloring& colors) {
        std::vector<int> c(colors);
        std::sort(c.begin(), c.end());
        return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
    }

private:
    std::vector<std::vector<int>> adj_;
};

bool same_histogram(const Coloring& a, const Coloring& b) {
    Coloring x(a), y(b);
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
}

Coloring individualize(const Coloring& colors, int v) {
    Coloring out(colors);
    out[static_cast<std::size_t>(v)] = *std::max_element(colors.begin(), colors.end()) + 1;
    return out;
}

struct Search {
    const Graph& graph;
    const Refiner& refiner;
    std::size_t max_elements;
    std::vector<Permutation> found;

    void run(const Coloring& src, const Coloring& tgt) {
        if (found.size() > max_elements) return;
        const std::size_t n = src.size();
        // smallest non-singleton cell of the source colouring
        std::vector<int> cell_size(n + 1, 0);
        for (int c : src) ++cell_size[static_cast<std::size_t>(c)];
        int target_color = -1;
        for (std::size_t c = 0; c < cell_size.size(); ++c) {
            if (cell_size[c] > 1 && (target_color < 0 || cell_size[c] < cell_size[static_cast<std::size_t>(target_color)])) {
                target_color = static_cast<int>(c);
            }
        }
        if (target_color < 0) {
            std::vector<int> where(n);
            for (std::size_t w = 0; w < n; ++w) where[static_cast<std::size_t>(tgt[w])] = static_cast<int>(w);
            std::vector<int> image(n);
            for (std::size_t v = 0; v < n; ++v) image[v] = where[static_cast<std::size_t>(src[v])];
            auto sigma = Permutation::from_images(std::move(image));
            if (is_automorphism(sigma, graph)) found.push_back(std::move(sigma));
            return;
        }
        const int v = static_cast<int>(std::find(src.begin(), src.end(), target_color) - src.begin());
        const Coloring src_next = refiner.refine(individualize(src, v));
        for (std::size_t w = 0; w < n; ++w) {
            if (tgt[w] != target_color) continue;
            Coloring tgt_next = refiner.refine(individualize(tgt, static_cast<int>(w)));
            if (same_histogram(src_next, tgt_next)) run(src_next, tgt_next);
            if (found.size() > max_elements) return;
        }
    }
};

}  // namespace

bool is_automorphism(const Permutation& sigma, const Graph& g) {
    if (sigma.degree() != g.node_count()) return false;
    for (const auto& [u, v] : g.edges()) {
        if (!g.has_edge(sigma(u), sigma(v))) return false;
    }
    return true;
}

AutGroup automorphisms(const Graph& g, int node_limit, std::size_t max_elements) {
    if (g.node_count() > node_limit) {
        throw NodeLimitExceeded("automorphism search limited to " + std::to_string(node_limit) +
                                " nodes, graph has " + std::to_string(g.node_count()));
    }
    if (g.node_count() == 0) return AutGroup({});
    Refiner refiner(g);
    const Coloring start = refiner.refine(Coloring(static_cast<std::size_t>(g.node_count()), 0));
    Search search{g, refiner, max_elements, {}};
    search.run(start, start);
    auto elements = std::move(search.found);
    std::sort(elements.begin(), elements.end());
    // identity sorts first under lexicographic image order
    return AutGroup(std::move(elements));
}

std::vector<Permutation> automorphisms_brute_force(const Graph& g) {
    std::vector<Permutation> out;
    if (g.node_count() == 0) return out;
    for (auto& p : enumerate_symmetric_group(g.node_count())) {
        if (is_automorphism(p, g)) out.push_back(std::move(p));
    }
    return out;
}

bool AutGroup::contains(const Permutation& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::vector<Permutation> AutGroup::stabilizer_of(std::span<const int> nodes) const {
    std::vector<Permutation> out;
    for (const auto& p : elements_) {
        if (std::all_of(nodes.begin(), nodes.end(), [&](int v) { return p(v) == v; })) out.push_back(p);
    }
    return out;
}

std::vector<Permutation> AutGroup::stabilizer_of_prefix(int count) const {
    std::vector<int> prefix(static_cast<std::size_t>(count));
    std::iota(prefix.begin(), prefix.end(), 0);
    return stabilizer_of(prefix);
}

bool AutGroup::is_group() const {
    if (elements_.empty()) return false;
    if (!contains(Permutation::identity(elements_.front().degree()))) return false;
    for (const auto& a : elements_) {
        if (!contains(inverse(a))) return false;
        for (const auto& b : elements_) {
            if (!contains(compose(a, b))) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Labels and query graphs

int label_size(int base_n, int label_index, int chain_bonus) {
    return 2 * base_n + label_index + chain_bonus + 3;
}

Graph attach_label(const Graph& g, int node, int label_index, int chain_bonus, std::optional<int> base_n) {
    if (node < 0 || node >= g.node_count()) throw std::out_of_range("attach_label: node out of range");
    if (label_index < 1 || chain_bonus < 0) throw std::invalid_argument("attach_label: bad label index");
    const int n = base_n.value_or(g.node_count());
    Graph out = g;
    const int spine_length = 2 * n + 3;
    const int spine = out.add_nodes(spine_length);
    out.add_edge(node, spine);
    for (int k = 1; k < spine_length; ++k) out.add_edge(spine + k - 1, spine + k);
    const int branch_length = label_index + chain_bonus;
    const int branch = out.add_nodes(branch_length);
    out.add_edge(spine + n + 1, branch);  // (n+2)-nd spine node
    for (int k = 1; k < branch_length; ++k) out.add_edge(branch + k - 1, branch + k);
    return out;
}

namespace {

Graph labeled_copy(const Graph& g, std::span<const int> fixed, int special, int bonus) {
    const int n = g.node_count();
    Graph out = g;
    int label = 1;
    for (int v : fixed) out = attach_label(out, v, label++, 0, n);
    return attach_label(out, special, label, bonus, n);
}

}  // namespace

int query_node_count(int n, int f) {
    const int copy = n + (f + 1) * (2 * n + 3) + (f + 1) * (f + 2) / 2;
    return 2 * copy + ((2 * copy) % 4 == 0 ? 2 : 0);
}

QueryGraph build_query(const Graph& g, std::span<const int> fixed, int i, int j) {
    const int n = g.node_count();
    if (i == j) throw std::invalid_argument("build_query: i and j must differ");
    if (i < 0 || j < 0 || i >= n || j >= n) throw std::out_of_range("build_query: node out of range");
    for (int v : fixed) {
        if (v == i || v == j) throw std::invalid_argument("build_query: i/j must not be fixed");
    }
    // Components of a disconnected copy could be exchanged across copies.
    const Graph base = is_connected(g) ? g : complement(g);
    Graph first = labeled_copy(base, fixed, i, 0);
    const bool pad = (2 * first.node_count()) % 4 == 0;
    if (pad) first = labeled_copy(base, fixed, i, 1);
    Graph second = labeled_copy(base, fixed, j, pad ? 1 : 0);
    QueryGraph q{disjoint_union(first, second), first.node_count(), pad};
    if (!in_ff_degree_set(q.graph.node_count())) {
        throw std::logic_error("build_query: padded node count " + std::to_string(q.graph.node_count()) +
                               " is not 2 mod 4");
    }
    return q;
}

// ---------------------------------------------------------------------------
// Promise oracle and the reduction

namespace {

// Returns the unique nontrivial automorphism, nullopt if rigid; throws when
// the UniqueGA_ff promise fails.
std::optional<Permutation> check_promise(const Graph& g, int node_limit) {
    if (!in_ff_degree_set(g.node_count())) {
        throw PromiseViolation("node count " + std::to_string(g.node_count()) + " is not in {2,6,10,...}");
    }
    const AutGroup aut = automorphisms(g, node_limit, 2);
    if (aut.size() > 2) throw PromiseViolation("graph has more than one nontrivial automorphism");
    if (aut.size() == 1) return std::nullopt;
    const Permutation& pi = aut.elements()[1];
    if (!is_fpf_involution(pi)) {
        throw PromiseViolation("unique nontrivial automorphism " + pi.cycle_string() +
                               " is not a fixed-point-free involution");
    }
    return pi;
}

class Reducer {
public:
    Reducer(const Graph& g, const UniqueGaOracle& oracle) : g_(g), oracle_(oracle) {
        if (g.node_count() > 63) throw NodeLimitExceeded("reduction supports at most 63 nodes");
    }

    ReductionResult literal() {
        const int n = g_.node_count();
        for (int i = n - 1; i >= 0; --i) {
            std::vector<int> fixed(static_cast<std::size_t>(i));
            std::iota(fixed.begin(), fixed.end(), 0);
            for (int j = i + 1; j < n; ++j) {
                if (ask(fixed, i, j, 0)) return finish(true);
            }
        }
        return finish(false);
    }

    ReductionResult smart() {
        std::vector<int> none;
        return finish(moves_something(none, 0));
    }

private:
    using Mask = std::uint64_t;

    static Mask mask_of(std::span<const int> nodes) {
        Mask m = 0;
        for (int v : nodes) m |= Mask{1} << v;
        return m;
    }

    bool ask(const std::vector<int>& fixed, int i, int j, int depth) {
        QueryGraph q = build_query(g_, fixed, i, j);
        const bool answer = oracle_(q.graph);
        log_.push_back({fixed, i, j, q.graph.node_count(), depth, answer});
        return answer;
    }

    // Is the pointwise stabilizer of `fixed` nontrivial? Runs the query loop
    // over the free nodes; before querying (i, j) it makes sure the copy
    // labelled at j is rigid, recursing with j added to the fixed set. The
    // copy labelled at i is rigid by the loop invariant (all larger i said NO).
    bool moves_something(const std::vector<int>& fixed, int depth) {
        const Mask key = mask_of(fixed);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::vector<int> free;
        for (int v = 0; v < g_.node_count(); ++v) {
            if (!(key >> v & 1)) free.push_back(v);
        }
        bool result = false;
        for (int a = static_cast<int>(free.size()) - 1; a >= 0 && !result; --a) {
            std::vector<int> prefix(fixed);
            prefix.insert(prefix.end(), free.begin(), free.begin() + a);
            for (std::size_t b = static_cast<std::size_t>(a) + 1; b < free.size() && !result; ++b) {
                std::vector<int> with_j(prefix);
                with_j.push_back(free[b]);
                if (moves_something(with_j, depth + 1)) {
                    result = true;
                } else {
                    result = ask(prefix, free[static_cast<std::size_t>(a)], free[b], depth);
                }
            }
        }
        memo_.emplace(key, result);
        return result;
    }

    ReductionResult finish(bool answer) { return {answer, std::move(log_)}; }

    const Graph& g_;
    const UniqueGaOracle& oracle_;
    std::vector<ReductionQuery> log_;
    std::map<Mask, bool> memo_;
};

}  // namespace

bool unique_ga_ff_oracle(const Graph& g, int node_limit) {
    return check_promise(g, node_limit).has_value();
}

ReductionResult reduce_ga_to_unique(const Graph& g, const UniqueGaOracle& oracle, ReductionMode mode) {
    Reducer reducer(g, oracle);
    return mode == ReductionMode::kLiteral ? reducer.literal() : reducer.smart();
}

// ---------------------------------------------------------------------------
// Promise instances and coset sampling

PromiseInstance PromiseInstance::verified(const Graph& g, int node_limit) {
    return {g, check_promise(g, node_limit), false};
}

PromiseInstance PromiseInstance::planted_yes(const Graph& g, const Permutation& pi) {
    if (!in_ff_degree_set(g.node_count())) throw PromiseViolation("planted instance has inadmissible node count");
    if (!is_fpf_involution(pi)) throw PromiseViolation("planted automorphism is not in K_n");
    if (!is_automorphism(pi, g)) throw PromiseViolation("planted permutation is not an automorphism");
    return {g, pi, true};
}

PromiseInstance PromiseInstance::planted_no(const Graph& g) {
    if (!in_ff_degree_set(g.node_count())) throw PromiseViolation("planted instance has inadmissible node count");
    return {g, std::nullopt, true};
}

PureSample coset_sample(const PromiseInstance& instance, CosetSign sign_choice, Rng& rng) {
    const int n = instance.graph.node_count();
    const Permutation sigma = random_permutation(n, rng);
    std::vector<Permutation> coset{sigma};
    if (instance.automorphism) coset.push_back(compose(sigma, *instance.automorphism));
    const double scale = 1.0 / std::sqrt(static_cast<double>(coset.size()));
    SparseState state(n, 1);
    for (const auto& p : coset) {
        const bool flip = sign_choice == CosetSign::kMinus && sign(p) == 1;
        state.accumulate(0, p, flip ? -scale : scale);
    }
    Provenance prov;
    if (instance.automorphism) {
        prov.kind = sign_choice == CosetSign::kPlus ? Provenance::Kind::kPlus : Provenance::Kind::kMinus;
        prov.pi = *instance.automorphism;
    }
    return {std::move(state), std::move(prov)};
}

}  // namespace qscd
