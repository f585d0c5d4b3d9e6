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

#include "qscd/graph.h"

#include <sstream>
#include <stdexcept>

namespace qscd {

Graph::Graph(int node_count) : node_count_(node_count) {
    if (node_count < 0) throw std::invalid_argument("negative node count");
}

Graph::Graph(int node_count, const std::vector<Edge>& edges) : Graph(node_count) {
    for (const auto& [u, v] : edges) add_edge(u, v);
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return edges_.count({u, v}) != 0;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= node_count_ || v >= node_count_) {
        throw std::out_of_range("edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("self-loop");
    if (u > v) std::swap(u, v);
    if (!edges_.insert({u, v}).second) throw std::invalid_argument("duplicate edge");
}

int Graph::add_nodes(int count) {
    const int first = node_count_;
    node_count_ += count;
    return first;
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(node_count_));
    for (const auto& [u, v] : edges_) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    return adj;
}

Graph apply_perm(const Permutation& sigma, const Graph& g) {
    if (sigma.degree() != g.node_count()) throw std::invalid_argument("apply_perm: degree mismatch");
    Graph out(g.node_count());
    for (const auto& [u, v] : g.edges()) out.add_edge(sigma(u), sigma(v));
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph out(a.node_count() + b.node_count());
    for (const auto& [u, v] : a.edges()) out.add_edge(u, v);
    for (const auto& [u, v] : b.edges()) out.add_edge(u + a.node_count(), v + a.node_count());
    return out;
}

bool is_connected(const Graph& g) {
    const int n = g.node_count();
    if (n <= 1) return true;
    const auto adj = g.adjacency();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = true;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n;
}

Graph complement(const Graph& g) {
    Graph out(g.node_count());
    for (int u = 0; u < g.node_count(); ++u) {
        for (int v = u + 1; v < g.node_count(); ++v) {
            if (!g.has_edge(u, v)) out.add_edge(u, v);
        }
    }
    return out;
}

std::string format_graph(const Graph& g) {
    std::string out = std::to_string(g.node_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& [u, v] : g.edges()) out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0) throw std::invalid_argument("bad graph header");
    Graph g(static_cast<int>(n));
    for (long long k = 0; k < m; ++k) {
        long long u = 0, v = 0;
        if (!(in >> u >> v)) throw std::invalid_argument("truncated edge list");
        if (u < 1 || v < 1 || u > n || v > n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop in graph file");
        if (u > v) throw std::invalid_argument("edge must be written as `u v` with u < v");
        if (g.has_edge(static_cast<int>(u - 1), static_cast<int>(v - 1))) {
            throw std::invalid_argument("duplicate edge in graph file");
        }
        g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
    }
    std::string extra;
    if (in >> extra) throw std::invalid_argument("trailing data after edge list");
    return g;
}

}  // namespace qscd
