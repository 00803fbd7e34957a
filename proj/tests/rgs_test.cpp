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

#include "rgsim/rgs.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "rgsim/dense_state.hpp"

namespace rgsim {
namespace {

// Adjacency rule restated from roles alone.
bool expected_edge(const RgsLayout &layout, VertexId a, VertexId b) {
    const auto &ra = layout.role(a);
    const auto &rb = layout.role(b);
    using K = PhotonRole::Kind;
    auto same_tree = [&] { return ra.side == rb.side && ra.arm == rb.arm; };
    if (ra.kind == K::Outer && rb.kind == K::Outer) {
        return false;
    }
    if (ra.kind == K::Outer || rb.kind == K::Outer) {
        const auto &inner = ra.kind == K::Outer ? rb : ra;
        return same_tree() && inner.level == 1;
    }
    if (!same_tree()) {
        return ra.level == 1 && rb.level == 1;
    }
    auto parent_of = [&](const PhotonRole &r) { return layout.shape.parent(r.position); };
    return parent_of(ra) == std::optional<std::size_t>(rb.position) ||
           parent_of(rb) == std::optional<std::size_t>(ra.position);
}

void check_against_rule(const RgsInstance &inst) {
    auto vs = inst.graph.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            EXPECT_EQ(inst.graph.has_edge(vs[i], vs[j]), expected_edge(inst.layout, vs[i], vs[j]))
                << vs[i] << "-" << vs[j];
        }
    }
}

TEST(RgsSpec, Validation) {
    EXPECT_THROW((RgsSpec{0, {1}}.validate()), std::invalid_argument);
    EXPECT_THROW((RgsSpec{1, {}}.validate()), std::invalid_argument);
    EXPECT_THROW((RgsSpec{1, {2, 0}}.validate()), std::invalid_argument);
    EXPECT_NO_THROW((RgsSpec{14, {10, 5}}.validate()));
    EXPECT_EQ((RgsSpec{14, {10, 5}}.to_string()), "m=14 b=(10,5)");
}

TEST(RgsSpec, ParseBranching) {
    EXPECT_EQ(parse_branching("10,5"), (std::vector<std::uint32_t>{10, 5}));
    EXPECT_EQ(parse_branching("(2, 2)"), (std::vector<std::uint32_t>{2, 2}));
    EXPECT_THROW(parse_branching(""), std::invalid_argument);
    EXPECT_THROW(parse_branching("2,x"), std::invalid_argument);
    EXPECT_THROW(parse_branching("0"), std::invalid_argument);
}

TEST(TreeShape, LevelSizesAndChildren) {
    std::vector<std::uint32_t> b{2, 3};
    TreeShape t(b);
    EXPECT_EQ(t.size(), 8u);
    EXPECT_EQ(t.level_size(1), 2u);
    EXPECT_EQ(t.level_size(2), 6u);
    for (std::size_t k = 0; k < t.size(); ++k) {
        EXPECT_EQ(t.children(k).size(), t.level(k) == 1 ? 3u : 0u);
        EXPECT_EQ(t.parent(k).has_value(), t.level(k) > 1);
    }
    // level order: children of node 0 come before children of node 1
    EXPECT_EQ(t.children(0)[0], 2u);
    EXPECT_EQ(t.children(1)[0], 5u);
}

TEST(Rgs, PhotonCounts) {
    EXPECT_EQ(photons_per_rgs({1, {1}}), 4u);
    EXPECT_EQ(photons_per_rgs({2, {2}}), 12u);
    EXPECT_EQ(photons_per_rgs({2, {2, 2}}), 28u);
    EXPECT_EQ(photons_per_rgs({14, {10, 5}}), 1708u);
    for (RgsSpec s : {RgsSpec{1, {1}}, RgsSpec{2, {2}}, RgsSpec{3, {2, 1, 2}}, RgsSpec{14, {10, 5}}}) {
        EXPECT_EQ(build_rgs(s).graph.size(), photons_per_rgs(s)) << s.to_string();
    }
}

TEST(Rgs, SmallestInstance) {
    auto inst = build_rgs({1, {1}});
    // outer_L - leaf_L - leaf_R - outer_R
    EXPECT_EQ(inst.graph.edges(), (std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {1, 3}, {2, 3}}));
    EXPECT_EQ(inst.layout.outer_vertex(Side::Left, 0), 0u);
    EXPECT_EQ(inst.layout.outer_vertex(Side::Right, 0), 2u);
}

TEST(Rgs, StructureMatchesRoleRule) {
    for (RgsSpec s : {RgsSpec{1, {1}}, RgsSpec{2, {2}}, RgsSpec{2, {2, 2}}, RgsSpec{3, {1, 2, 1}}}) {
        check_against_rule(build_rgs(s));
    }
}

TEST(Rgs, Degrees) {
    RgsSpec s{2, {2, 2}};
    auto inst = build_rgs(s);
    std::size_t outer_count = 0;
    for (VertexId v : inst.graph.vertices()) {
        const auto &r = inst.layout.role(v);
        auto deg = inst.graph.neighbors(v).size();
        if (r.kind == PhotonRole::Kind::Outer) {
            ++outer_count;
            EXPECT_EQ(deg, 2u);  // one edge per first-level photon
        } else if (r.level == 1) {
            EXPECT_EQ(deg, 1u + (2 * s.m - 1) * 2u + 2u);
        } else {
            EXPECT_EQ(deg, 1u);
        }
    }
    EXPECT_EQ(outer_count, 2 * s.m);
}

TEST(Rgs, VopAssignment) {
    RgsSpec s{1, {2}};
    std::vector<bool> z{true, false, false, true, false, true};
    auto inst = build_rgs(s, z);
    for (VertexId v = 0; v < z.size(); ++v) {
        EXPECT_EQ(inst.graph.vop(v).is_identity_or_z(), true);
        EXPECT_EQ(inst.graph.vop(v) == LocalClifford::z(), z[v]) << v;
    }
    EXPECT_THROW(build_rgs(s, std::vector<bool>(3)), std::invalid_argument);
}

TEST(Rgs, AppendOffsetsIds) {
    GraphState g;
    g.add_vertex();
    auto layout = append_rgs(g, {1, {1}});
    EXPECT_EQ(layout.outer_vertex(Side::Left, 0), 1u);
    EXPECT_EQ(g.size(), 5u);
    EXPECT_EQ(g.neighbors(0).size(), 0u);
}

TEST(Rgs, EmissionOrder) {
    auto one = build_rgs({1, {1}});
    EXPECT_EQ(emission_order(one.layout, Side::Left), (std::vector<VertexId>{0, 1}));

    auto two = build_rgs({2, {1}});
    // left side: arm0 outer 0, leaf 1; arm1 outer 2, leaf 3
    EXPECT_EQ(emission_order(two.layout, Side::Left), (std::vector<VertexId>{0, 2, 1, 3}));

    auto big = build_rgs({3, {2, 2}});
    for (Side side : {Side::Left, Side::Right}) {
        auto order = emission_order(big.layout, side);
        EXPECT_EQ(order.size(), photons_per_rgs(big.layout.spec) / 2);
        std::uint32_t last_level = 0;
        for (VertexId v : order) {
            const auto &r = big.layout.role(v);
            EXPECT_EQ(r.side, side);
            EXPECT_GE(r.level, last_level);
            last_level = r.level;
        }
    }
}

// Dense oracle: the RGS state equals the circuit |+>^n, CZ over the role-rule
// edges, then Z on flagged photons.
TEST(Rgs, DenseMatchesCircuit) {
    std::mt19937_64 rng(7);
    for (RgsSpec s : {RgsSpec{1, {1}}, RgsSpec{2, {1}}, RgsSpec{1, {2}}, RgsSpec{1, {2, 2}}}) {
        auto n = photons_per_rgs(s);
        std::vector<bool> z(n);
        for (std::size_t k = 0; k < n; ++k) {
            z[k] = rng() & 1;
        }
        auto inst = build_rgs(s, z);
        auto dense = DenseState::from_graph(inst.graph);
        EXPECT_NEAR(dense.norm(), 1.0, 1e-12);

        std::vector<VertexId> order = inst.graph.vertices();
        std::vector<std::complex<double>> amps(std::size_t{1} << n, 1.0 / std::sqrt(double(std::size_t{1} << n)));
        DenseState circuit(order, amps);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (expected_edge(inst.layout, order[i], order[j])) {
                    circuit.apply_cz(order[i], order[j]);
                }
            }
            if (z[i]) {
                circuit.apply_pauli(order[i], Pauli::Z);
            }
        }
        EXPECT_NEAR(dense.fidelity(circuit), 1.0, 1e-9) << s.to_string();
    }
}

}  // namespace
}  // namespace rgsim
