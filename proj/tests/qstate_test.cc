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


#include "qscd/qstate.h"

#include <gtest/gtest.h>

#include <numbers>

#include "test_support.h"

namespace qscd {
namespace {

using testing::kInvSqrt2;
using testing::near;

SparseState pair_state(const Permutation& sigma, const Permutation& pi, double second_sign) {
    return superposition(sigma.degree(), {{sigma, kInvSqrt2}, {compose(sigma, pi), second_sign * kInvSqrt2}});
}

SparseState random_state(int n, int m, Rng& rng) {
    SparseState s(n, m);
    for (int t = 0; t < 5; ++t) {
        s.accumulate(uniform_below(rng, m), random_permutation(n, rng), {uniform_unit(rng) - 0.5, uniform_unit(rng) - 0.5});
    }
    SparseState out(n, m);
    const double norm = s.norm();
    for (const auto& [b, a] : s.amplitudes()) out.accumulate(b.control, b.perm, a / norm);
    return out;
}

TEST(BasisState, StartState) {
    const auto s = basis_state(0, Permutation::identity(4), 2);
    EXPECT_EQ(s.support_size(), 1U);
    EXPECT_NEAR(s.norm(), 1.0, 1e-12);
    Rng rng(1);
    const auto m = measure_full(s, rng);
    EXPECT_EQ(m.control, 0);
    EXPECT_TRUE(m.perm.is_identity());
    EXPECT_THROW(basis_state(2, Permutation::identity(3), 2), std::out_of_range);
}

TEST(Accumulate, PrunesCancellation) {
    SparseState s(3, 1);
    const auto id = Permutation::identity(3);
    s.accumulate(0, id, 0.5);
    s.accumulate(0, id, -0.5);
    EXPECT_EQ(s.support_size(), 0U);
    s.accumulate(0, id, 1e-13);
    EXPECT_EQ(s.support_size(), 0U);
}

TEST(Fourier, HadamardOnStartState) {
    const auto id = Permutation::identity(3);
    const auto s = fourier_control(basis_state(0, id, 2), FourierDirection::kForward);
    EXPECT_TRUE(near(s.amplitude(0, id), kInvSqrt2));
    EXPECT_TRUE(near(s.amplitude(1, id), kInvSqrt2));
}

TEST(Fourier, ThreeLevelRow) {
    const auto id = Permutation::identity(2);
    const auto s = fourier_control(basis_state(1, id, 3), FourierDirection::kForward);
    const Amplitude w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    const double r = 1.0 / std::sqrt(3.0);
    EXPECT_TRUE(near(s.amplitude(0, id), r));
    EXPECT_TRUE(near(s.amplitude(1, id), r * w));
    EXPECT_TRUE(near(s.amplitude(2, id), r * w * w));
}

TEST(Fourier, InverseUndoesForward) {
    Rng rng(2);
    for (int m : {2, 3, 5}) {
        const auto s = random_state(4, m, rng);
        const auto back = fourier_control(fourier_control(s, FourierDirection::kForward), FourierDirection::kInverse);
        EXPECT_TRUE(states_equal(s, back, false));
    }
}

TEST(ControlledPower, Examples) {
    const auto pi = Permutation::from_cycles(4, {{1, 2}, {3, 4}});
    Rng rng(3);
    const auto sigma = random_permutation(4, rng);
    EXPECT_TRUE(states_equal(controlled_power(basis_state(0, sigma, 2), pi), basis_state(0, sigma, 2), false));
    const auto s = random_state(4, 2, rng);
    EXPECT_TRUE(states_equal(controlled_power(controlled_power(s, pi), pi), s, false));

    const auto c = Permutation::from_cycles(3, {{1, 2, 3}});
    const auto out = controlled_power(basis_state(2, Permutation::identity(3), 3), c);
    EXPECT_TRUE(states_equal(out, basis_state(2, Permutation::from_cycles(3, {{1, 3, 2}}), 3), false));
}

TEST(PhaseBySign, Examples) {
    Rng rng(4);
    const auto s = random_state(5, 2, rng);
    EXPECT_TRUE(states_equal(phase_by_sign(phase_by_sign(s)), s, false));
    const auto id = basis_state(0, Permutation::identity(3), 1);
    EXPECT_TRUE(states_equal(phase_by_sign(id), id, false));

    const auto sigma = Permutation::from_cycles(4, {{1, 2, 3}});
    const auto pi = Permutation::from_cycles(4, {{1, 4}});
    EXPECT_TRUE(states_equal(phase_by_sign(pair_state(sigma, pi, 1.0)), pair_state(sigma, pi, -1.0), false));
}

TEST(Translate, Examples) {
    Rng rng(5);
    const auto s = random_state(5, 2, rng);
    EXPECT_TRUE(states_equal(translate(s, Permutation::identity(5), Side::kLeft), s, false));
    EXPECT_TRUE(states_equal(translate(s, Permutation::identity(5), Side::kRight), s, false));
    const auto tau = random_permutation(5, rng);
    EXPECT_TRUE(states_equal(translate(translate(s, tau, Side::kLeft), inverse(tau), Side::kLeft), s, false));

    const auto pi = Permutation::from_cycles(6, {{1, 2}, {3, 4}, {5, 6}});
    const auto sigma = random_permutation(6, rng);
    const auto t6 = random_permutation(6, rng);
    const auto moved = translate(pair_state(sigma, pi, 1.0), t6, Side::kRight);
    EXPECT_TRUE(states_equal(moved, pair_state(compose(sigma, t6), conjugate(pi, t6), 1.0), false));
}

TEST(MeasureControl, DeterministicOnEigenstate) {
    Rng rng(6);
    const auto pi = Permutation::from_cycles(4, {{1, 2}, {3, 4}});
    SparseState s = attach_control(pair_state(Permutation::identity(4), pi, 1.0), 2);
    for (int t = 0; t < 100; ++t) EXPECT_EQ(measure_control(s, rng).outcome, 0);
    const auto probs = control_distribution(s);
    EXPECT_NEAR(probs[0] + probs[1], 1.0, 1e-9);
}

TEST(MeasureControl, UniformQubit) {
    Rng rng(7);
    const auto s = fourier_control(basis_state(0, Permutation::identity(2), 2), FourierDirection::kForward);
    constexpr int kTrials = 4000;
    int zeros = 0;
    for (int t = 0; t < kTrials; ++t) {
        const auto m = measure_control(s, rng);
        zeros += m.outcome == 0;
        ASSERT_EQ(m.collapsed.support_size(), 1U);
    }
    EXPECT_NEAR(zeros / static_cast<double>(kTrials), 0.5, testing::kCi4000);
}

TEST(MeasureFull, PairStatesHaveEqualMarginals) {
    Rng rng(8);
    const auto pi = Permutation::from_cycles(4, {{1, 3}, {2, 4}});
    const auto sigma = Permutation::from_cycles(4, {{1, 2}});
    for (double sgn : {1.0, -1.0}) {
        const auto s = pair_state(sigma, pi, sgn);
        constexpr int kTrials = 4000;
        int first = 0;
        for (int t = 0; t < kTrials; ++t) {
            const auto m = measure_full(s, rng);
            ASSERT_TRUE(m.perm == sigma || m.perm == compose(sigma, pi));
            first += m.perm == sigma;
        }
        EXPECT_NEAR(first / static_cast<double>(kTrials), 0.5, testing::kCi4000);
    }
}

TEST(StatesEqual, Examples) {
    Rng rng(9);
    const auto s = random_state(4, 2, rng);
    EXPECT_TRUE(states_equal(s, s, false));
    SparseState neg(4, 2);
    for (const auto& [b, a] : s.amplitudes()) neg.accumulate(b.control, b.perm, -a);
    EXPECT_FALSE(states_equal(s, neg, false));
    EXPECT_TRUE(states_equal(s, neg, true));
    const auto pi = Permutation::from_cycles(4, {{1, 2}, {3, 4}});
    const auto plus = pair_state(Permutation::identity(4), pi, 1.0);
    const auto minus = pair_state(Permutation::identity(4), pi, -1.0);
    EXPECT_FALSE(states_equal(plus, minus, false));
    EXPECT_FALSE(states_equal(plus, minus, true));
}

TEST(Control, AttachDetach) {
    const auto s = basis_state(0, Permutation::identity(3), 1);
    const auto with = attach_control(s, 3);
    EXPECT_EQ(with.modulus(), 3);
    EXPECT_TRUE(states_equal(detach_control(with), s, false));
    EXPECT_THROW(detach_control(basis_state(1, Permutation::identity(3), 2)), std::logic_error);
}

TEST(InnerProduct, Orthogonality) {
    const auto pi = Permutation::from_cycles(4, {{1, 2}, {3, 4}});
    const auto sigma = Permutation::from_cycles(4, {{2, 3}});
    EXPECT_NEAR(std::abs(inner_product(pair_state(sigma, pi, 1.0), pair_state(sigma, pi, -1.0))), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(inner_product(pair_state(sigma, pi, 1.0), pair_state(sigma, pi, 1.0))), 1.0, 1e-12);
}

TEST(Serialization, RoundTripsExactly) {
    Rng rng(10);
    for (int m : {1, 2, 3}) {
        const auto s = random_state(5, m, rng);
        const auto text = serialize_state(s);
        const auto back = parse_state(text);
        EXPECT_EQ(back.amplitudes(), s.amplitudes());
        EXPECT_EQ(serialize_state(back), text);
    }
}

TEST(Serialization, RejectsBadInput) {
    EXPECT_THROW(parse_state(""), std::invalid_argument);
    EXPECT_THROW(parse_state("QSTATE 2 1 1\n"), std::invalid_argument);
    EXPECT_THROW(parse_state("QSTATE 2 1 1\n0 1 0 2: 1 1\n"), std::invalid_argument);
    EXPECT_THROW(parse_state("QSTATE 2 1 2\n0 1 0 2: 1 2\n0 1 0 2: 1 2\n"), std::invalid_argument);
    EXPECT_THROW(parse_state("QSTATE 2 1 1\n1 1 0 2: 1 2\n"), std::invalid_argument);
}

}  // namespace
}  // namespace qscd
