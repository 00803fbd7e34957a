// Copyright 2026 The rgsim Authors
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

#include "rgsim/correction.hpp"

#include <gtest/gtest.h>

namespace rgsim {
namespace {

struct ZeroBackend : PhotonBackend {
    std::pair<bool, bool> bell_measure(PhotonRef, PhotonRef) override { return {false, false}; }
    void absorb(PhotonRef) override {}
    bool measure(PhotonRef, Basis) override { return false; }
};

ChainConfig chain(double distance, RgsSpec spec, double attenuation, double cap) {
    ChainConfig c;
    c.distance_km = distance;
    c.rgss_spacing_km = 4;
    c.attenuation_db_per_km = attenuation;
    c.bsm_success_cap = cap;
    c.rgs = std::move(spec);
    return c;
}

TrialOutcome first_success(const ChainConfig &c, std::uint64_t seed) {
    auto topo = plan_chain(c);
    for (std::uint64_t i = 0;; ++i) {
        Rng rng(trial_seed(seed, i));
        auto t = run_attempt(c, topo, rng, SimMode::Accounting);
        if (t.success) {
            return t;
        }
    }
}

std::vector<TwoBitSummary> summarize(const TrialOutcome &t) {
    std::vector<TwoBitSummary> s;
    for (const auto &r : t.reports) {
        s.push_back(reduce_absa(r));
    }
    return s;
}

TEST(Correction, IdentityVopsZeroOutcomesGiveIdentityFrame) {
    auto c = chain(12, {2, {2}}, 0, 1);
    auto topo = plan_chain(c);
    Rng rng(1);
    auto inputs = sample_arrivals(topo, c, rng);
    ZeroBackend backend;
    std::vector<AbsaReport> reports;
    for (std::uint32_t j = 0; j < inputs.size(); ++j) {
        for (auto &h : inputs[j]) {
            std::fill(h.vop_z.begin(), h.vop_z.end(), false);
        }
        reports.push_back(run_absa(j, inputs[j], c.rgs, 1.0, rng, backend));
    }
    EXPECT_EQ(correction_one_stage(reports), PauliFrame{});
    std::vector<TwoBitSummary> s;
    for (const auto &r : reports) {
        s.push_back(reduce_absa(r));
        EXPECT_EQ(s.back(), TwoBitSummary{});
    }
    std::array<EndRecord, 2> ends;
    ends[0].kept_memory = 0;
    ends[1].kept_memory = 0;
    EXPECT_EQ(correction_two_stage(s, ends), PauliFrame{});
}

TEST(Correction, SingleAbsaZeroSummaries) {
    std::array<EndRecord, 2> ends;
    ends[0].kept_memory = 0;
    ends[1].kept_memory = 1;
    EXPECT_EQ(correction_two_stage({TwoBitSummary{}}, ends), PauliFrame{});
    auto f = correction_two_stage({TwoBitSummary{true, false}}, ends);
    EXPECT_EQ(f.at(EndNode::Left), Pauli::Z);
    EXPECT_EQ(f.at(EndNode::Right), Pauli::I);
    ends[1].kept_memory.reset();
    EXPECT_THROW(correction_two_stage({TwoBitSummary{}}, ends), FailedAttempt);
    EXPECT_THROW(correction_two_stage({}, ends), std::invalid_argument);
}

TEST(Correction, VopFlipOnXMeasuredInnerFlipsOneEnd) {
    auto t = first_success(chain(12, {2, {1}}, 0, 1), 8);
    auto &r = t.reports[1];
    const auto base = correction_one_stage(t.reports);
    const auto kept = *r.kept_arm;
    // b = (1): the kept tree is one X-measured photon
    const std::size_t x_slot = r.inputs[0].slot(kept, 1);
    r.inputs[0].vop_z[x_slot] = !r.inputs[0].vop_z[x_slot];
    auto flipped = correction_one_stage(t.reports);
    EXPECT_NE(flipped.at(EndNode::Left), base.at(EndNode::Left));
    EXPECT_EQ(flipped.at(EndNode::Right), base.at(EndNode::Right));
    r.inputs[0].vop_z[x_slot] = !r.inputs[0].vop_z[x_slot];

    // A Z-measured photon's VOP never matters.
    const std::size_t z_slot = r.inputs[0].slot(1 - kept, 1);
    r.inputs[0].vop_z[z_slot] = !r.inputs[0].vop_z[z_slot];
    EXPECT_EQ(correction_one_stage(t.reports), base);
}

TEST(Correction, OutcomeFlipOnPrunedTreeFlipsBothEnds) {
    auto t = first_success(chain(12, {2, {1}}, 0, 1), 9);
    auto &r = t.reports[1];
    const auto base = correction_one_stage(t.reports);
    const std::size_t z_slot = r.inputs[1].slot(1 - *r.kept_arm, 1);
    r.outcomes[1][z_slot] = !r.outcomes[1][z_slot];
    auto f = correction_one_stage(t.reports);
    EXPECT_NE(f.at(EndNode::Left), base.at(EndNode::Left));
    EXPECT_NE(f.at(EndNode::Right), base.at(EndNode::Right));
}

TEST(Correction, MethodsAgreeOnRandomTrials) {
    auto c = chain(16, {3, {2, 2}}, 0.2, 0.5);
    auto topo = plan_chain(c);
    int successes = 0;
    for (int i = 0; i < 20000 && successes < 1000; ++i) {
        Rng rng(trial_seed(404, i));
        auto t = run_attempt(c, topo, rng, SimMode::Accounting);
        if (!t.success) {
            EXPECT_THROW(correction_one_stage(t.reports), FailedAttempt);
            continue;
        }
        ++successes;
        ASSERT_EQ(correction_one_stage(t.reports), correction_two_stage(summarize(t), t.ends));
    }
    EXPECT_EQ(successes, 1000);
}

TEST(Ledger, OneStageCountsMeasuredPhotons) {
    auto c = chain(16, {2, {2, 2}}, 0.3, 0.5);
    auto topo = plan_chain(c);
    Rng rng(12);
    auto t = run_attempt(c, topo, rng, SimMode::Accounting);
    auto l = comms_ledger(t, CorrectionMethod::OneStage);
    std::uint64_t measured = 0;
    for (const auto &r : t.reports) {
        measured += r.measured_photons();
    }
    ASSERT_EQ(l.absa_count(), 4u);
    EXPECT_EQ(l.end(EndNode::Left).bits_received, 2 * measured);
    EXPECT_EQ(l.end(EndNode::Left).bits_processed, 2 * measured + t.ends[0].local_bits());
    EXPECT_EQ(l.end(EndNode::Right).bits_processed, 2 * measured + t.ends[1].local_bits());
    EXPECT_EQ(l.nodes.front().node, "end_left");
    EXPECT_EQ(l.nodes[1].node, "absa_0");
}

TEST(Ledger, TwoStageAbsaLoadIsConstant) {
    for (double att : {0.0, 0.2, 1.0}) {
        auto c = chain(24, {3, {2, 3}}, att, 0.5);
        auto topo = plan_chain(c);
        Rng rng(13);
        auto t = run_attempt(c, topo, rng, SimMode::Accounting);
        auto l = comms_ledger(t, CorrectionMethod::TwoStage);
        const std::uint64_t per_absa = 2 * photons_per_rgs(c.rgs);
        for (std::size_t j = 1; j + 1 < l.absa_count(); ++j) {
            EXPECT_EQ(l.absa(j).bits_processed, per_absa);
            EXPECT_EQ(l.absa(j).bits_sent, 2u);
        }
        EXPECT_EQ(l.end(EndNode::Left).bits_processed, 2 * l.absa_count() + t.ends[0].local_bits());
    }
}

TEST(Ledger, LocalBitsAreTwoPerUnkeptMemory) {
    auto t = first_success(chain(8, {4, {1}}, 0, 1), 3);
    EXPECT_EQ(t.ends[0].local_bits(), 6u);
    EXPECT_EQ(t.ends[1].local_bits(), 6u);
}

}  // namespace
}  // namespace rgsim
