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


#include "qscd/qscdff.h"

#include <gtest/gtest.h>

#include <map>

#include "test_support.h"

namespace qscd {
namespace {

using testing::kInvSqrt2;
using testing::near;

Permutation key6() { return Permutation::from_cycles(6, {{1, 4}, {2, 6}, {3, 5}}); }

TEST(GenPlus, TwoPointSupportWithEqualAmplitudes) {
    Rng rng(1);
    const auto pi = key6();
    for (int t = 0; t < 100; ++t) {
        const auto sample = gen_plus(pi, rng);
        ASSERT_EQ(sample.state.support_size(), 2U);
        const auto& [b0, a0] = *sample.state.amplitudes().begin();
        const auto sigma = b0.perm;
        const auto partner = compose(sigma, pi);
        EXPECT_TRUE(near(sample.state.amplitude(0, sigma), kInvSqrt2));
        EXPECT_TRUE(near(sample.state.amplitude(0, partner), kInvSqrt2));
        EXPECT_EQ(sample.provenance.kind, Provenance::Kind::kPlus);
        EXPECT_EQ(*sample.provenance.pi, pi);
        EXPECT_NEAR(sample.state.norm(), 1.0, 1e-12);
    }
}

TEST(GenPlus, LiteralCircuitMatchesClosedForm) {
    Rng rng(2);
    const auto pi = key6();
    for (int t = 0; t < 20; ++t) {
        const auto sigma = random_permutation(6, rng);
        const auto expected =
            superposition(6, {{sigma, kInvSqrt2}, {compose(sigma, pi), kInvSqrt2}});
        EXPECT_TRUE(states_equal(gen_plus_at(pi, sigma).state, expected, false));
    }
}

TEST(GenPlus, MeasuredPermutationsUniformOverS6) {
    Rng rng(3);
    const auto pi = key6();
    constexpr int kDraws = 72000;
    std::map<Permutation, int> counts;
    for (int d = 0; d < kDraws; ++d) ++counts[measure_full(gen_plus(pi, rng).state, rng).perm];
    EXPECT_LT(testing::chi_square(counts, 720, kDraws), testing::kChi2Df719);
}

TEST(GenPlus, RejectsNonKeys) {
    Rng rng(4);
    EXPECT_THROW(gen_plus(Permutation::from_cycles(6, {{1, 2}}), rng), std::invalid_argument);
    EXPECT_THROW(gen_plus(Permutation::from_cycles(4, {{1, 2}, {3, 4}}), rng), std::invalid_argument);
}

TEST(GenIota, Examples) {
    Rng rng(5);
    int identity_count = 0;
    constexpr int kTrials = 4000;
    for (int t = 0; t < kTrials; ++t) {
        const auto s = gen_iota(2, rng);
        ASSERT_EQ(s.state.support_size(), 1U);
        identity_count += s.state.amplitudes().begin()->first.perm.is_identity();
    }
    EXPECT_NEAR(identity_count / static_cast<double>(kTrials), 0.5, testing::kCi4000);

    constexpr int kDraws = 72000;
    std::map<Permutation, int> counts;
    for (int d = 0; d < kDraws; ++d) ++counts[gen_iota(6, rng).state.amplitudes().begin()->first.perm];
    EXPECT_LT(testing::chi_square(counts, 720, kDraws), testing::kChi2Df719);
}

TEST(Convert, FlipsRelativeSign) {
    Rng rng(6);
    const auto pi = key6();
    const auto plus = gen_plus(pi, rng);
    const auto minus = convert(plus);
    EXPECT_EQ(minus.provenance.kind, Provenance::Kind::kMinus);
    Amplitude product = 1.0;
    for (const auto& [b, a] : minus.state.amplitudes()) product *= a;
    EXPECT_TRUE(near(product, -0.5));
    // Exactly one support amplitude changes sign.
    int flipped = 0;
    for (const auto& [b, a] : plus.state.amplitudes()) flipped += near(minus.state.amplitude(b.control, b.perm), -a);
    EXPECT_EQ(flipped, 1);
    EXPECT_EQ(convert(minus).state.amplitudes(), plus.state.amplitudes());
    const auto iota = gen_iota(6, rng);
    EXPECT_TRUE(states_equal(convert(iota).state, iota.state, true));
}

TEST(Distinguish, PlusAlwaysYesMinusAlwaysNo) {
    Rng rng(7);
    const auto pi = key6();
    for (int t = 0; t < 1000; ++t) {
        const auto plus = gen_plus(pi, rng);
        ASSERT_EQ(distinguish(plus, pi, rng), kYes);
        ASSERT_EQ(distinguish(convert(plus), pi, rng), kNo);
        const auto probs = distinguish_probabilities(plus.state, pi);
        ASSERT_LT(probs[1], 1e-12);
    }
}

TEST(Distinguish, IotaIsAFairCoin) {
    Rng rng(8);
    const auto pi = key6();
    constexpr int kTrials = 4000;
    int yes = 0;
    for (int t = 0; t < kTrials; ++t) yes += distinguish(gen_iota(6, rng), pi, rng) == kYes;
    EXPECT_NEAR(yes / static_cast<double>(kTrials), 0.5, testing::kCi4000);
    const auto probs = distinguish_probabilities(gen_iota(6, rng).state, pi);
    EXPECT_NEAR(probs[0], 0.5, 1e-12);
}

TEST(Tuples, ShapesAndProvenance) {
    Rng rng(9);
    const auto pi = key6();
    const auto plus = plus_tuple(pi, 3, rng);
    const auto minus = minus_tuple(pi, 2, rng);
    const auto iota = iota_tuple(6, 4, rng);
    EXPECT_EQ(plus.samples.size(), 3U);
    EXPECT_EQ(minus.samples.size(), 2U);
    EXPECT_EQ(iota.samples.size(), 4U);
    for (const auto& s : minus.samples) EXPECT_EQ(s.provenance.kind, Provenance::Kind::kMinus);
    for (const auto& s : iota.samples) EXPECT_FALSE(s.provenance.pi.has_value());
    EXPECT_EQ(states_of(plus).size(), 3U);
}

}  // namespace
}  // namespace qscd
