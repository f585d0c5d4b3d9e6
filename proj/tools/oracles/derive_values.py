#!/usr/bin/env python3
# Copyright 2026 The qscd Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Independent derivation of the constants frozen in the C++ tests.

Uses only itertools, math, scipy and networkx; nothing here shares code with
the C++ library. Run it to regenerate the values quoted in tests/.
"""

import itertools
import math

import networkx as nx
from scipy.stats import chi2


def compose(s, t):
    return tuple(s[t[i]] for i in range(len(s)))


def inverse(s):
    out = [0] * len(s)
    for i, v in enumerate(s):
        out[v] = i
    return tuple(out)


def fpf_involutions(n):
    return [p for p in itertools.permutations(range(n))
            if all(p[i] != i and p[p[i]] == i for i in range(n))]


def main():
    k6 = fpf_involutions(6)
    print("|K_6| =", len(k6))
    base = k6[0]
    hits = {}
    for tau in itertools.permutations(range(6)):
        c = compose(inverse(tau), compose(base, tau))
        hits[c] = hits.get(c, 0) + 1
    print("conjugation hits per element:", sorted(set(hits.values())))
    print("S_3: (1 2)(2 3) images =", [v + 1 for v in compose((1, 0, 2), (0, 2, 1))])

    for df in (1, 2, 14, 719):
        print(f"chi2 critical df={df} alpha=0.001: {chi2.isf(0.001, df):.4f}")
    print(f"hoeffding 4000 trials delta=0.01: {math.sqrt(math.log(2 / 0.01) / 8000):.6f}")

    for n in range(2, 7):
        rigid = None
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            g = nx.Graph()
            g.add_nodes_from(range(n))
            g.add_edges_from(p for b, p in enumerate(pairs) if mask >> b & 1)
            autos = sum(1 for _ in nx.algorithms.isomorphism.GraphMatcher(g, g).isomorphisms_iter())
            if autos == 1:
                rigid = sorted((u + 1, v + 1) for u, v in g.edges())
                break
        print(f"first rigid graph on {n} nodes:", rigid)

    tree = nx.Graph([(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7)])
    count = lambda g: sum(1 for _ in nx.algorithms.isomorphism.GraphMatcher(g, g).isomorphisms_iter())
    print("|Aut(7-node tree)| =", count(tree))
    print("|Aut(tree + edge 1-3)| =", count(nx.Graph(list(tree.edges()) + [(1, 3)])))
    spider = nx.Graph([(i, i + 1) for i in range(1, 13)] + [(3, 14)])
    print("|Aut(14-node spider)| =", count(spider))
    print("|Aut(tree u tree)| =", count(nx.disjoint_union(tree, tree)))
    print("|Aut(K_3)| =", count(nx.complete_graph(3)))
    labelled = 0
    for n in range(1, 5):
        labelled += 1 << (n * (n - 1) // 2)
    print("labelled graphs on 1..4 nodes:", labelled)


if __name__ == "__main__":
    main()
