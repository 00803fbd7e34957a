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

#include "rgsim/protocol.hpp"

#include <gtest/gtest.h>

#include <set>

#include "rgsim/correction.hpp"
#include "rgsim/dense_state.hpp"

namespace rgsim {
namespace {

ChainConfig toy(double distance, RgsSpec spec, double attenuation, double cap) {
    ChainConfig c;
    c.distance_km = distance;
    c.rgss_spacing_km = 4;
    c.attenuation_db_per_km = attenuation;
    c.bsm_success_cap = cap;
    c.rgs = std::move(spec);
    return c;
}

// Bell fidelity of the kept memories after the given frame.
double final_fidelity(const TrialOutcome &t, const PauliFrame &frame) {
    const auto &fin = *t.exact;
    EXPECT_EQ(fin.graph.size(), 2u);
    auto dense = DenseState::from_graph(fin.graph);
    return bell_fidelity(dense, fin.left, fin.right, frame);
}

std::vector<TwoBitSummary> summaries(const TrialOutcome &t) {
    std::vector<TwoBitSummary> out;
    for (const auto &r : t.reports) {
        out.push_back(reduce_absa(r));
    }
    return out;
}

TEST(Outcomes, EnumerationVisitsEveryBranch) {
    EnumeratedOutcomes e;
    std::set<std::vector<bool>> seen;
    do {
        std::vector<bool> branch;
        branch.push_back(e.next(std::nullopt));
        branch.push_back(e.next(true));
        branch.push_back(e.next(std::nullopt));
        EXPECT_TRUE(branch[1]);
        seen.insert(branch);
    } while (e.advance());
    EXPECT_EQ(seen.size(), 4u);
}

TEST(Protocol, ModeNames) {
    EXPECT_EQ(parse_mode("exact"), SimMode::Exact);
    EXPECT_EQ(parse_mode("accounting"), SimMode::Accounting);
    EXPECT_THROW(parse_mode("dense"), std::invalid_argument);
    EXPECT_STREQ(mode_name(SimMode::Exact), "exact");
}

TEST(Protocol, BsmAttempts) {
    AbsaInputs in;
    for (auto &h : in) {
        h = HalfInput{SourceKind::EndNode, 3, 1, {true, false, true}, {false, false, false}};
    }
    in[1].arrived[2] = false;
    Rng rng(1);
    auto st = bsm_attempts(in, 1.0, rng);
    EXPECT_EQ(st, (std::vector<BsmStatus>{BsmStatus::Success, BsmStatus::Lost, BsmStatus::Lost}));
    st = bsm_attempts(in, 0.0, rng);
    EXPECT_EQ(st[0], BsmStatus::Failed);
}

TEST(Protocol, AllOuterLostFailsAbsa) {
    auto c = toy(4, {1, {1}}, 0, 1);
    auto topo = plan_chain(c);
    Rng rng(3);
    auto in = sample_arrivals(topo, c, rng);
    in[0][0].arrived[0] = false;
    in[0][1].arrived[0] = false;
    struct Null : PhotonBackend {
        std::pair<bool, bool> bell_measure(PhotonRef, PhotonRef) override { return {false, false}; }
        void absorb(PhotonRef) override {}
        bool measure(PhotonRef, Basis) override { return false; }
    } backend;
    auto r = run_absa(0, in[0], c.rgs, 1.0, rng, backend);
    EXPECT_FALSE(r.kept_arm.has_value());
    EXPECT_FALSE(r.success);
    EXPECT_THROW(reduce_absa(r), FailedAttempt);
    EXPECT_THROW(correction_one_stage({r}), FailedAttempt);
}

TEST(Protocol, SecondArmKeptWhenFirstFails) {
    auto c = toy(12, {2, {2}}, 0, 1);
    auto topo = plan_chain(c);
    Rng rng(4);
    auto in = sample_arrivals(topo, c, rng);
    in[1][0].arrived[in[1][0].slot(0, 0)] = false;  // arm 0 outer lost at ABSA 1
    Rng coin(5);
    struct Count : PhotonBackend {
        int bells = 0;
        int measured = 0;
        std::pair<bool, bool> bell_measure(PhotonRef, PhotonRef) override {
            ++bells;
            return {false, false};
        }
        void absorb(PhotonRef) override {}
        bool measure(PhotonRef, Basis) override {
            ++measured;
            return false;
        }
    } backend;
    auto r = run_absa(1, in[1], c.rgs, 1.0, coin, backend);
    ASSERT_TRUE(r.kept_arm.has_value());
    EXPECT_EQ(*r.kept_arm, 1u);
    EXPECT_EQ(r.bsm[0].status, BsmStatus::Lost);
    ASSERT_EQ(r.z_logical.size(), 2u);
    for (const auto &t : r.z_logical) {
        EXPECT_EQ(t.arm, 0u);
        EXPECT_TRUE(t.result.success);
    }
    EXPECT_TRUE(r.x_logical[0]->success);
    EXPECT_TRUE(r.x_logical[1]->success);
    EXPECT_EQ(backend.bells, 1);
    EXPECT_EQ(backend.measured, 8);
    EXPECT_EQ(r.measured_photons(), 10u);
}

TEST(Protocol, ZeroLossFullCapAlwaysSucceeds) {
    for (SimMode mode : {SimMode::Accounting, SimMode::Exact}) {
        auto c = toy(12, {2, {2, 1}}, 0, 1);
        auto topo = plan_chain(c);
        for (int i = 0; i < 20; ++i) {
            Rng rng(trial_seed(1, i));
            EXPECT_TRUE(run_attempt(c, topo, rng, mode).success);
        }
    }
}

TEST(Protocol, ZeroCapNeverSucceeds) {
    auto c = toy(8, {3, {1}}, 0, 0);
    auto topo = plan_chain(c);
    for (int i = 0; i < 20; ++i) {
        Rng rng(trial_seed(2, i));
        EXPECT_FALSE(run_attempt(c, topo, rng, SimMode::Accounting).success);
    }
}

TEST(Protocol, SameSeedSameTrial) {
    auto c = toy(16, {3, {2, 2}}, 0.2, 0.5);
    auto topo = plan_chain(c);
    Rng a(77);
    Rng b(77);
    auto x = run_attempt(c, topo, a, SimMode::Accounting);
    auto y = run_attempt(c, topo, b, SimMode::Accounting);
    ASSERT_EQ(x.reports.size(), y.reports.size());
    for (std::size_t j = 0; j < x.reports.size(); ++j) {
        EXPECT_EQ(x.reports[j].outcomes, y.reports[j].outcomes);
        EXPECT_EQ(x.reports[j].kept_arm, y.reports[j].kept_arm);
    }
    EXPECT_EQ(x.success, y.success);
}

// Random exact trials on several chains, including lossy ones: every
// successful attempt ends in a Bell pair after either correction.
TEST(Protocol, ExactBellPairUnderBothCorrections) {
    struct Case {
        double distance;
        RgsSpec spec;
        double attenuation;
        double cap;
    };
    std::vector<Case> cases{{4, {1, {1}}, 0, 1},    {8, {1, {1}}, 0, 1},     {8, {2, {2}}, 0, 1},
                            {12, {2, {2, 1}}, 0, 1}, {16, {3, {2, 2}}, 0.3, 0.5}, {12, {2, {1, 2, 1}}, 0.3, 0.7},
                            {4, {3, {1}}, 1.0, 0.5}, {8, {4, {3, 2}}, 0.2, 0.5}};
    for (const auto &cs : cases) {
        auto c = toy(cs.distance, cs.spec, cs.attenuation, cs.cap);
        auto topo = plan_chain(c);
        int successes = 0;
        for (int i = 0; i < 150; ++i) {
            Rng rng(trial_seed(31, i));
            auto t = run_attempt(c, topo, rng, SimMode::Exact);
            if (!t.success) {
                continue;
            }
            ++successes;
            auto one = correction_one_stage(t.reports);
            auto two = correction_two_stage(summaries(t), t.ends);
            EXPECT_EQ(one, two);
            EXPECT_NEAR(final_fidelity(t, one), 1.0, 1e-9) << cs.spec.to_string() << " trial " << i;
        }
        EXPECT_GT(successes, 0) << cs.spec.to_string();
    }
}

}  // namespace
}  // namespace rgsim
