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

#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qscd/perm.h"

namespace qscd {

using Edge = std::pair<int, int>;

/// Simple undirected graph on nodes 0..node_count-1. Edges are stored with
/// the smaller endpoint first.
class Graph {
public:
    explicit Graph(int node_count = 0);
    Graph(int node_count, const std::vector<Edge>& edges);

    int node_count() const { return node_count_; }
    const std::set<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_edge(int u, int v) const;
    /// Throws on self-loops, duplicates and out-of-range endpoints.
    void add_edge(int u, int v);
    /// Appends `count` isolated nodes; returns the index of the first one.
    int add_nodes(int count);

    std::vector<std::vector<int>> adjacency() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int node_count_;
    std::set<Edge> edges_;
};

/// Relabel: edge {u,v} -> {sigma(u), sigma(v)}.
Graph apply_perm(const Permutation& sigma, const Graph& g);

/// Nodes of `b` are shifted past those of `a`.
Graph disjoint_union(const Graph& a, const Graph& b);

bool is_connected(const Graph& g);

/// Same nodes, edge {u,v} iff {u,v} is not an edge of g. Same automorphisms.
Graph complement(const Graph& g);

/// Graph file: line `n m`, then m lines `u v` with 1 <= u < v <= n.
std::string format_graph(const Graph& g);
Graph parse_graph(std::string_view text);

}  // namespace qscd
