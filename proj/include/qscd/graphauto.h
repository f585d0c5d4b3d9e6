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
 * Graph automorphisms and the Turing reduction from the graph automorphism
 * problem (GA) to its promise version UniqueGA_ff: "the graph has |V| in
 * {2,6,10,...} and either no nontrivial automorphism or exactly one, which
 * is a fixed-point-free involution".
 *
 * Also the coset-sampling bridge that turns a promise instance into rho+,
 * rho- or iota samples.
 */

#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qscd/graph.h"
#include "qscd/qscdff.h"

namespace qscd {

/// A query or instance that breaks the UniqueGA_ff promise.
class PromiseViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NodeLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultNodeLimit = 40;
/// Query graphs of the reduction carry long label chains.
inline constexpr int kOracleNodeLimit = 1024;

/// Explicit element list of Aut(G), identity first.
class AutGroup {
public:
    explicit AutGroup(std::vector<Permutation> elements) : elements_(std::move(elements)) {}

    const std::vector<Permutation>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool contains(const Permutation& p) const;
    bool is_trivial() const { return elements_.size() <= 1; }

    /// Pointwise stabilizer of nodes 0..count-1.
    std::vector<Permutation> stabilizer_of_prefix(int count) const;
    /// Pointwise stabilizer of the listed nodes.
    std::vector<Permutation> stabilizer_of(std::span<const int> nodes) const;
    /// Closed under compose and inverse and contains the identity.
    bool is_group() const;

private:
    std::vector<Permutation> elements_;
};

/// Every automorphism, by backtracking over individualize-and-refine
/// colorings (colour refinement on neighbour-colour multisets). Stops early
/// once more than `max_elements` have been found.
AutGroup automorphisms(const Graph& g, int node_limit = kDefaultNodeLimit,
                       std::size_t max_elements = std::numeric_limits<std::size_t>::max());

/// Brute force over all n! relabelings. Test oracle for small graphs.
std::vector<Permutation> automorphisms_brute_force(const Graph& g);

bool is_automorphism(const Permutation& sigma, const Graph& g);

/// Hangs label `label_index` on `node`: a path of 2n+3 new nodes attached to
/// `node`, plus a path of label_index + chain_bonus new nodes attached to the
/// (n+2)-nd node of the first path. n is `base_n` (defaults to the current
/// node count). New nodes are appended in creation order.
Graph attach_label(const Graph& g, int node, int label_index, int chain_bonus = 0,
                   std::optional<int> base_n = std::nullopt);

/// Number of nodes a label adds: 2n + label_index + chain_bonus + 3.
int label_size(int base_n, int label_index, int chain_bonus = 0);

struct QueryGraph {
    Graph graph;
    int copy_size = 0;
    bool padded = false;
};

/// G_[fixed, i] disjoint-union G_[fixed, j]: both copies carry labels
/// 1..f on the `fixed` nodes (in list order); label f+1 goes on node i in
/// the first copy and on node j in the second. When the union would have
/// 0 (mod 4) nodes, the tail chain of label f+1 grows by one node in both
/// copies, so the count always lands in {2, 6, 10, ...}. A disconnected g
/// is replaced by its complement first so that each copy is connected.
QueryGraph build_query(const Graph& g, std::span<const int> fixed, int i, int j);

/// Closed-form node count of build_query for an n-node graph with f fixed nodes.
int query_node_count(int n, int f);

/// Checks the UniqueGA_ff promise and answers it. Throws PromiseViolation
/// when |V| is outside {2,6,...}, |Aut| > 2, or the nontrivial element has a
/// fixed point or is not an involution.
bool unique_ga_ff_oracle(const Graph& g, int node_limit = kOracleNodeLimit);

using UniqueGaOracle = std::function<bool(const Graph&)>;

struct ReductionQuery {
    std::vector<int> fixed;
    int i = 0;
    int j = 0;
    int node_count = 0;
    int depth = 0;  // 0 for the top-level loop, >0 for rigidity pre-checks
    bool answer = false;
};

struct ReductionResult {
    bool has_nontrivial_automorphism = false;
    std::vector<ReductionQuery> queries;
};

enum class ReductionMode {
    /// The plain query loop. Can issue promise-violating queries (e.g. on
    /// the path 1-2-3).
    kLiteral,
    /// The same loop, with each query preceded by a recursive check that the
    /// second copy is rigid. Every query then satisfies the promise.
    kSmart,
};

/// Decides GA with a UniqueGA_ff oracle: for i = n..1 and j = i+1..n query
/// build_query(G, {1..i-1}, i, j); YES at the first YES, otherwise NO.
ReductionResult reduce_ga_to_unique(const Graph& g, const UniqueGaOracle& oracle,
                               ReductionMode mode = ReductionMode::kSmart);

/// Graph with the UniqueGA_ff promise established, plus its automorphism list.
struct PromiseInstance {
    Graph graph;
    /// The unique nontrivial automorphism, if any.
    std::optional<Permutation> automorphism;
    bool planted = false;

    /// Computes Aut(G) and validates the promise.
    static PromiseInstance verified(const Graph& g, int node_limit = kOracleNodeLimit);
    /// Trusts `pi` as the unique nontrivial automorphism; still checks that pi
    /// is an automorphism in K_n and |V| is admissible.
    static PromiseInstance planted_yes(const Graph& g, const Permutation& pi);
    /// Trusts that `g` is rigid; only checks |V|.
    static PromiseInstance planted_no(const Graph& g);

    bool is_yes() const { return automorphism.has_value(); }
};

enum class CosetSign { kPlus, kMinus };

/// Coset sampling: uniform sigma, the pure state
/// |Aut|^{-1/2} sum_{a in Aut} (+-1)^{sgn(sigma a)} |sigma a>.
/// YES instances give rho+/rho- draws, NO instances give iota draws.
PureSample coset_sample(const PromiseInstance& instance, CosetSign sign, Rng& rng);

}  // namespace qscd
