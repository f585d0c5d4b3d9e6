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


#include "qscd/pkc.h"

#include <gtest/gtest.h>

#include <set>

#include "qscd/reductions.h"
#include "test_support.h"

namespace qscd {
namespace {

TEST(Keygen, Examples) {
    Rng rng(1);
    EXPECT_EQ(keygen(SecurityParam::ff(2), rng).secret, Permutation::from_cycles(2, {{1, 2}}));
    const auto k6 = enumerate_fpf_involutions(6);
    const std::set<Permutation> members(k6.begin(), k6.end());
    for (int t = 0; t < 20; ++t) EXPECT_TRUE(members.count(keygen(SecurityParam::ff(6), rng).secret));
    const auto cyc = keygen(SecurityParam::cyc(6, 3), rng);
    EXPECT_TRUE(is_cyclic_key(cyc.secret, 3));
    EXPECT_EQ(cyc.secret.support_size(), 6);
    SecurityParam bad;
    bad.n = 4;
    EXPECT_THROW(keygen(bad, rng), std::invalid_argument);
}

TEST(IssueKeyCopy, FfCopiesAreFreshPlusStates) {
    Rng rng(2);
    const auto kp = keygen(SecurityParam::ff(10), rng);
    auto a = issue_key_copy(kp, std::nullopt, rng);
    auto b = issue_key_copy(kp, std::nullopt, rng);
    EXPECT_EQ(distinguish(a.peek().state, kp.secret, rng), kYes);
    EXPECT_NE(a.peek().state.amplitudes(), b.peek().state.amplitudes());
}

TEST(IssueKeyCopy, CycCopiesDecodeToTheirSymbol) {
    Rng rng(3);
    const auto kp = keygen(SecurityParam::cyc(6, 3), rng);
    for (int s = 0; s < 3; ++s) {
        const auto copy = issue_key_copy(kp, s, rng);
        EXPECT_EQ(decode_cyc(copy.peek().state, kp.secret, 3, rng), s);
    }
    EXPECT_THROW(issue_key_copy(kp, 3, rng), std::out_of_range);
    EXPECT_THROW(issue_key_copy(kp, std::nullopt, rng), std::invalid_argument);
}

TEST(EncryptFf, BitZeroKeepsStateBitOneFlipsOneSign) {
    Rng rng(4);
    const auto kp = keygen(SecurityParam::ff(6), rng);
    auto copy0 = issue_key_copy(kp, std::nullopt, rng);
    const auto before0 = copy0.peek().state;
    EXPECT_EQ(encrypt_ff(0, copy0).state.amplitudes(), before0.amplitudes());

    auto copy1 = issue_key_copy(kp, std::nullopt, rng);
    const auto before1 = copy1.peek().state;
    const auto c = encrypt_ff(1, copy1);
    int flipped = 0;
    int kept = 0;
    for (const auto& [b, a] : before1.amplitudes()) {
        const auto after = c.state.amplitude(b.control, b.perm);
        flipped += testing::near(after, -a);
        kept += testing::near(after, a);
    }
    EXPECT_EQ(flipped, 1);
    EXPECT_EQ(kept, 1);
}

TEST(EncryptFf, KeyCopiesAreSingleUse) {
    Rng rng(5);
    const auto kp = keygen(SecurityParam::ff(6), rng);
    auto copy = issue_key_copy(kp, std::nullopt, rng);
    encrypt_ff(1, copy);
    EXPECT_TRUE(copy.consumed());
    EXPECT_THROW(encrypt_ff(0, copy), ConsumedKeyError);
    EXPECT_THROW(copy.peek(), ConsumedKeyError);
    auto fresh = issue_key_copy(kp, std::nullopt, rng);
    EXPECT_THROW(encrypt_ff(2, fresh), std::invalid_argument);
    EXPECT_FALSE(fresh.consumed());
}

TEST(EncryptFf, RoundTripsAlways) {
    Rng rng(6);
    for (int n : {2, 6, 10}) {
        for (int t = 0; t < 1000; ++t) {
            const auto kp = keygen(SecurityParam::ff(n), rng);
            const int bit = uniform_below(rng, 2);
            auto copy = issue_key_copy(kp, std::nullopt, rng);
            const auto c = encrypt_ff(bit, copy);
            ASSERT_EQ(decrypt(kp, c, rng), bit);
            ASSERT_LT(decrypt_distribution(kp, c)[static_cast<std::size_t>(1 - bit)], 1e-12);
        }
    }
}

TEST(EncryptCyc, RoundTripsAndConsumesTheSeries) {
    Rng rng(7);
    const auto kp = keygen(SecurityParam::cyc(6, 3), rng);
    for (int s = 0; s < 3; ++s) {
        for (int t = 0; t < 200; ++t) {
            auto series = KeySeries::issue(kp, rng);
            const auto chosen = series.at(s).peek().state;
            const auto c = encrypt_cyc(s, series);
            EXPECT_EQ(c.state.amplitudes(), chosen.amplitudes());
            ASSERT_EQ(decrypt(kp, c, rng), s);
            for (int r = 0; r < 3; ++r) EXPECT_TRUE(series.at(r).consumed());
            EXPECT_THROW(encrypt_cyc(s, series), ConsumedKeyError);
        }
    }
    auto series = KeySeries::issue(kp, rng);
    EXPECT_THROW(encrypt_cyc(3, series), std::out_of_range);
    const auto ff = keygen(SecurityParam::ff(6), rng);
    EXPECT_THROW(KeySeries::issue(ff, rng), ModeMismatch);
}

TEST(EncryptCyc, ModulusTwoCiphertextsMatchFf) {
    Rng rng(8);
    const auto kp = keygen(SecurityParam::ff(6), rng);
    for (int bit : {0, 1}) {
        const auto sigma = random_permutation(6, rng);
        KeyCopy copy(gen_plus_at(kp.secret, sigma), kp.params);
        const auto ff = encrypt_ff(bit, copy);
        EXPECT_TRUE(states_equal(ff.state, gen_cyc_at(kp.secret, 2, bit, sigma).state, true));
    }
}

TEST(Decrypt, ModeMismatch) {
    Rng rng(9);
    const auto ff = keygen(SecurityParam::ff(6), rng);
    const auto cyc = keygen(SecurityParam::cyc(6, 3), rng);
    auto copy = issue_key_copy(ff, std::nullopt, rng);
    const auto c = encrypt_ff(0, copy);
    EXPECT_THROW(decrypt(cyc, c, rng), ModeMismatch);
    const auto ff10 = keygen(SecurityParam::ff(10), rng);
    EXPECT_THROW(decrypt(ff10, c, rng), ModeMismatch);
}

TEST(Decrypt, WrongKeyIsNotAlwaysRight) {
    Rng rng(10);
    const auto kp = keygen(SecurityParam::ff(6), rng);
    KeyPair wrong = kp;
    while (wrong.secret == kp.secret) wrong.secret = sample_fpf_involution(kp.params, rng);
    int correct = 0;
    constexpr int kTrials = 1000;
    for (int t = 0; t < kTrials; ++t) {
        const int bit = uniform_below(rng, 2);
        auto copy = issue_key_copy(kp, std::nullopt, rng);
        correct += decrypt(wrong, encrypt_ff(bit, copy), rng) == bit;
    }
    EXPECT_LT(correct, kTrials);
}

TEST(AdversaryView, Shapes) {
    Rng rng(11);
    const auto kp = keygen(SecurityParam::ff(6), rng);
    auto copy = issue_key_copy(kp, std::nullopt, rng);
    const auto c = encrypt_ff(1, copy);
    const auto empty = adversary_view(kp, c, 0, rng);
    EXPECT_TRUE(empty.key_copies.empty());
    EXPECT_EQ(empty.states().size(), 1U);
    const auto three = adversary_view(kp, c, 3, rng);
    EXPECT_EQ(three.states().size(), 4U);
    for (const auto& k : three.key_copies) EXPECT_EQ(k.provenance.kind, Provenance::Kind::kPlus);
    EXPECT_THROW(adversary_view(kp, c, -1, rng), std::invalid_argument);
}

TEST(AdversaryView, OmniscientWinsBasisMeasurementIsBlind) {
    Rng rng(12);
    const auto kp = keygen(SecurityParam::ff(6), rng);
    auto view_source = [&kp](int bit) -> TupleSource {
        return [kp, bit](Rng& r) {
            auto copy = issue_key_copy(kp, std::nullopt, r);
            const auto view = adversary_view(kp, encrypt_ff(bit, copy), 3, r);
            SampleTuple t;
            for (auto& s : view.states()) t.samples.push_back({s, {}});
            return t;
        };
    };
    const auto omni = estimate_advantage(omniscient_distinguisher(kp.secret), view_source(0), view_source(1), 1000, 1);
    EXPECT_DOUBLE_EQ(omni.advantage, 1.0);
    const auto basis = estimate_advantage(basis_measure_distinguisher(), view_source(0), view_source(1), 4000, 2);
    EXPECT_TRUE(basis.within_ci_of_zero()) << summary_line(basis);
}

TEST(Ciphertext, BasisMarginalIsMessageIndependent) {
    Rng rng(13);
    const auto kp = keygen(SecurityParam::cyc(6, 3), rng);
    // Each ciphertext puts probability 1/3 on each member of its coset.
    for (int s = 0; s < 3; ++s) {
        auto series = KeySeries::issue(kp, rng);
        const auto c = encrypt_cyc(s, series);
        for (const auto& [b, a] : c.state.amplitudes()) EXPECT_NEAR(std::norm(a), 1.0 / 3.0, 1e-12);
    }
}

TEST(FileFormats, KeyRoundTrip) {
    Rng rng(14);
    for (const auto& params : {SecurityParam::ff(10), SecurityParam::cyc(8, 4)}) {
        const auto kp = keygen(params, rng);
        const auto text = format_key(kp);
        const auto back = parse_key(text);
        EXPECT_EQ(back.secret, kp.secret);
        EXPECT_EQ(back.params, kp.params);
        EXPECT_EQ(format_key(back), text);
    }
    EXPECT_EQ(format_key(keygen(SecurityParam::ff(2), rng)), "FF 2\n2: 2 1\n");
}

TEST(FileFormats, KeyRejectsBadInput) {
    EXPECT_THROW(parse_key("FF 4\n4: 2 1 4 3\n"), std::invalid_argument);
    EXPECT_THROW(parse_key("FF 6\n6: 2 1 3 4 6 5\n"), std::invalid_argument);
    EXPECT_THROW(parse_key("CYC 6 3\n6: 2 1 4 3 6 5\n"), std::invalid_argument);
    EXPECT_THROW(parse_key("XX 2\n2: 2 1\n"), std::invalid_argument);
    EXPECT_THROW(parse_key("FF 2 9\n2: 2 1\n"), std::invalid_argument);
    EXPECT_THROW(parse_key("FF 6\n2: 2 1\n"), std::invalid_argument);
}

TEST(FileFormats, CiphertextRoundTrip) {
    Rng rng(15);
    const auto kp = keygen(SecurityParam::cyc(6, 3), rng);
    auto series = KeySeries::issue(kp, rng);
    const auto c = encrypt_cyc(2, series);
    const auto text = format_ciphertext(c);
    EXPECT_EQ(text.rfind("CYC 6 3\nQSTATE 6 1 3\n", 0), 0U);
    const auto back = parse_ciphertext(text);
    EXPECT_EQ(back.state.amplitudes(), c.state.amplitudes());
    EXPECT_EQ(format_ciphertext(back), text);
    EXPECT_EQ(decrypt(kp, back, rng), 2);
    EXPECT_THROW(parse_ciphertext("FF 2\nQSTATE 6 1 0\n"), std::invalid_argument);
}

}  // namespace
}  // namespace qscd
