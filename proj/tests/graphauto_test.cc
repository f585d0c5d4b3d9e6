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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "test_support.h"

namespace qscd {
namespace {

Graph from_mask(int n, unsigned mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++bit) {
            if (mask >> bit & 1U) g.add_edge(u, v);
        }
    }
    return g;
}

Graph rigid_six() { return Graph(6, testing::rigid_six_edges()); }
Graph rigid_seven() { return Graph(7, testing::rigid_seven_edges()); }

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

std::set<Permutation> as_set(const std::vector<Permutation>& v) { return {v.begin(), v.end()}; }

bool oracle(const Graph& q) { return unique_ga_ff_oracle(q); }

TEST(Automorphisms, Examples) {
    const Graph k2(2, {{0, 1}});
    EXPECT_EQ(as_set(automorphisms(k2).elements()),
              (std::set<Permutation>{Permutation::identity(2), Permutation::from_cycles(2, {{1, 2}})}));
    EXPECT_TRUE(automorphisms(rigid_six()).is_trivial());
    EXPECT_TRUE(automorphisms(rigid_seven()).is_trivial());

    const Graph doubled = disjoint_union(rigid_six(), rigid_six());
    const auto aut = automorphisms(doubled);
    ASSERT_EQ(aut.size(), 2U);
    EXPECT_TRUE(is_fpf_involution(aut.elements()[1]));
    EXPECT_TRUE(aut.elements()[0].is_identity());
}

TEST(Automorphisms, NoRigidGraphsOnTwoToFiveNodes) {
    for (int n = 2; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (unsigned mask = 0; mask < (1U << pairs); ++mask) {
            ASSERT_FALSE(automorphisms(from_mask(n, mask)).is_trivial()) << "n=" << n << " mask=" << mask;
        }
    }
}

TEST(Automorphisms, MatchesBruteForceExhaustively) {
    for (int n = 1; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (unsigned mask = 0; mask < (1U << pairs); ++mask) {
            const Graph g = from_mask(n, mask);
            const auto fast = automorphisms(g);
            ASSERT_EQ(as_set(fast.elements()), as_set(automorphisms_brute_force(g))) << format_graph(g);
            ASSERT_TRUE(fast.is_group());
        }
    }
}

TEST(Automorphisms, MatchesBruteForceOnRandomSixAndSevenNodeGraphs) {
    Rng rng(1);
    for (int t = 0; t < 60; ++t) {
        const int n = 6 + t % 2;
        const Graph g = from_mask(n, static_cast<unsigned>(rng() & ((1U << (n * (n - 1) / 2)) - 1)));
        ASSERT_EQ(as_set(automorphisms(g).elements()), as_set(automorphisms_brute_force(g))) << format_graph(g);
    }
}

TEST(Automorphisms, LimitsAndEarlyStop) {
    EXPECT_THROW(automorphisms(Graph(41)), NodeLimitExceeded);
    EXPECT_NO_THROW(automorphisms(Graph(41), 41, 3));
    EXPECT_EQ(automorphisms(Graph(6), kDefaultNodeLimit, 2).size(), 3U);
}

TEST(AutGroup, Stabilizers) {
    const auto aut = automorphisms(path(3));
    ASSERT_EQ(aut.size(), 2U);
    EXPECT_EQ(aut.stabilizer_of_prefix(1).size(), 1U);
    const std::vector<int> middle{1};
    EXPECT_EQ(aut.stabilizer_of(middle).size(), 2U);
    EXPECT_TRUE(aut.contains(Permutation::from_cycles(3, {{1, 3}})));
}

TEST(AttachLabel, SizeAndRigidity) {
    for (int n = 1; n <= 6; ++n) {
        for (int j = 1; j <= 6; ++j) {
            EXPECT_EQ(label_size(n, j), 2 * n + j + 3);
            EXPECT_EQ(attach_label(Graph(n), 0, j).node_count(), n + 2 * n + j + 3);
        }
    }
    EXPECT_EQ(label_size(4, 2, 1), 2 * 4 + 2 + 1 + 3);
    EXPECT_THROW(attach_label(Graph(3), 3, 1), std::out_of_range);
    EXPECT_THROW(attach_label(Graph(3), 0, 0), std::invalid_argument);
}

TEST(AttachLabel, FixesTheNodeAndAddsNoAutomorphism) {
    Rng rng(2);
    for (int t = 0; t < 40; ++t) {
        const int n = 3 + t % 3;
        const Graph g = from_mask(n, static_cast<unsigned>(rng() & ((1U << (n * (n - 1) / 2)) - 1)));
        const int node = uniform_below(rng, n);
        const Graph labelled = attach_label(g, node, 1 + uniform_below(rng, n));
        const auto base = automorphisms(g, kOracleNodeLimit);
        const auto aut = automorphisms(labelled, kOracleNodeLimit);
        EXPECT_LE(aut.size(), base.size());
        for (const auto& a : aut.elements()) EXPECT_EQ(a(node), node);
    }
}

TEST(BuildQuery, NodeCountsLieInTheAdmissibleSet) {
    for (int n = 2; n <= 7; ++n) {
        for (int f = 0; f + 2 <= n; ++f) {
            std::vector<int> fixed;
            for (int v = 0; v < f; ++v) fixed.push_back(v);
            const auto q = build_query(path(n), fixed, f, f + 1);
            EXPECT_EQ(q.graph.node_count(), query_node_count(n, f));
            EXPECT_TRUE(in_ff_degree_set(q.graph.node_count())) << q.graph.node_count();
        }
    }
}

TEST(BuildQuery, YesBaseGivesUniqueFixedPointFreeInvolution) {
    // Path 1-2-3: the reflection swaps nodes 1 and 3 and fixes 2.
    const std::vector<int> fixed{1};
    const auto q = build_query(path(3), fixed, 0, 2);
    const auto aut = automorphisms(q.graph, kOracleNodeLimit);
    ASSERT_EQ(aut.size(), 2U);
    EXPECT_TRUE(is_fpf_involution(aut.elements()[1]));
    EXPECT_TRUE(unique_ga_ff_oracle(q.graph));
}

TEST(BuildQuery, NoBaseGivesRigidGraph) {
    const std::vector<int> fixed{0};
    const auto q = build_query(path(3), fixed, 1, 2);
    EXPECT_TRUE(automorphisms(q.graph, kOracleNodeLimit).is_trivial());
    EXPECT_FALSE(unique_ga_ff_oracle(q.graph));
}

TEST(BuildQuery, DisconnectedBaseStaysWithinPromise) {
    // Two isolated nodes: without complementing, the unlabelled node could
    // swap between copies on its own.
    const auto q = build_query(Graph(2), {}, 0, 1);
    const auto aut = automorphisms(q.graph, kOracleNodeLimit);
    ASSERT_EQ(aut.size(), 2U);
    EXPECT_TRUE(is_fpf_involution(aut.elements()[1]));
}

TEST(BuildQuery, RejectsBadArguments) {
    const std::vector<int> fixed{0};
    EXPECT_THROW(build_query(path(3), fixed, 1, 1), std::invalid_argument);
    EXPECT_THROW(build_query(path(3), fixed, 0, 2), std::invalid_argument);
    EXPECT_THROW(build_query(path(3), fixed, 1, 3), std::out_of_range);
}

TEST(Oracle, Examples) {
    // Rigid 14-node spider.
    Graph spider = path(13);
    spider.add_nodes(1);
    spider.add_edge(2, 13);
    EXPECT_FALSE(unique_ga_ff_oracle(spider));
    const Graph doubled = disjoint_union(rigid_seven(), rigid_seven());
    EXPECT_TRUE(unique_ga_ff_oracle(doubled));
    EXPECT_THROW(unique_ga_ff_oracle(Graph(3, {{0, 1}, {1, 2}, {0, 2}})), PromiseViolation);
    EXPECT_THROW(unique_ga_ff_oracle(Graph(6)), PromiseViolation);
    // Unique nontrivial automorphism with fixed points.
    Graph tree = rigid_seven();
    tree.add_edge(0, 2);
    ASSERT_EQ(automorphisms(tree).size(), 2U);
    Graph padded = disjoint_union(tree, rigid_seven());
    EXPECT_THROW(unique_ga_ff_oracle(padded), PromiseViolation);
}

TEST(ReduceGa, Examples) {
    EXPECT_TRUE(reduce_ga_to_unique(Graph(2, {{0, 1}}), oracle).has_nontrivial_automorphism);
    EXPECT_FALSE(reduce_ga_to_unique(rigid_six(), oracle).has_nontrivial_automorphism);
    EXPECT_FALSE(reduce_ga_to_unique(Graph(1), oracle).has_nontrivial_automorphism);
}

TEST(ReduceGa, MatchesGroundTruthOnAllSmallGraphs) {
    for (int n = 1; n <= 4; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (unsigned mask = 0; mask < (1U << pairs); ++mask) {
            const Graph g = from_mask(n, mask);
            const bool truth = automorphisms_brute_force(g).size() > 1;
            ASSERT_EQ(reduce_ga_to_unique(g, oracle).has_nontrivial_automorphism, truth) << format_graph(g);
        }
    }
}

TEST(ReduceGa, LiteralModeBreaksThePromiseOnAPath) {
    EXPECT_THROW(reduce_ga_to_unique(path(3), oracle, ReductionMode::kLiteral), PromiseViolation);
    EXPECT_TRUE(reduce_ga_to_unique(path(3), oracle, ReductionMode::kSmart).has_nontrivial_automorphism);
}

TEST(ReduceGa, QueryLogRecordsEveryQuery) {
    int calls = 0;
    const auto result = reduce_ga_to_unique(rigid_six(), [&](const Graph& q) {
        ++calls;
        return unique_ga_ff_oracle(q);
    });
    EXPECT_EQ(static_cast<int>(result.queries.size()), calls);
    for (const auto& q : result.queries) {
        EXPECT_TRUE(in_ff_degree_set(q.node_count));
        EXPECT_FALSE(q.answer);
    }
}

TEST(PromiseInstance, ConstructionAndCosetSampling) {
    const Graph doubled = disjoint_union(rigid_seven(), rigid_seven());
    const auto yes = PromiseInstance::verified(doubled);
    ASSERT_TRUE(yes.is_yes());
    const Permutation pi = *yes.automorphism;
    EXPECT_NO_THROW(PromiseInstance::planted_yes(doubled, pi));
    EXPECT_THROW(PromiseInstance::planted_yes(doubled, Permutation::identity(14)), PromiseViolation);
    EXPECT_THROW(PromiseInstance::planted_no(Graph(4)), PromiseViolation);

    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        const auto plus = coset_sample(yes, CosetSign::kPlus, rng);
        ASSERT_EQ(plus.state.support_size(), 2U);
        Amplitude product = 1.0;
        for (const auto& [b, a] : plus.state.amplitudes()) product *= a;
        EXPECT_NEAR(product.real(), 0.5, 1e-12);
        const auto minus = coset_sample(yes, CosetSign::kMinus, rng);
        product = 1.0;
        for (const auto& [b, a] : minus.state.amplitudes()) product *= a;
        EXPECT_NEAR(product.real(), -0.5, 1e-12);
        EXPECT_EQ(minus.provenance.kind, Provenance::Kind::kMinus);
    }
    Graph spider = path(13);
    spider.add_nodes(1);
    spider.add_edge(2, 13);
    const auto no = PromiseInstance::verified(spider);
    EXPECT_FALSE(no.is_yes());
    for (auto sign : {CosetSign::kPlus, CosetSign::kMinus}) {
        const auto s = coset_sample(no, sign, rng);
        EXPECT_EQ(s.state.support_size(), 1U);
        EXPECT_EQ(s.provenance.kind, Provenance::Kind::kIota);
    }
}

}  // namespace
}  // namespace qscd
