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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "rgsim/graph_state.hpp"

namespace rgsim {

/// RGS parameters: m arms per side and the tree branching vector (b1, ..., bn).
struct RgsSpec {
    std::uint32_t m = 1;
    std::vector<std::uint32_t> branching{1};

    /// Throws std::invalid_argument unless m >= 1, n >= 1 and every b_i >= 1.
    void validate() const;
    std::string to_string() const;  // "m=14 b=(10,5)"

    friend bool operator==(const RgsSpec &, const RgsSpec &) = default;
};

/// Parses "10,5" (also accepts surrounding parentheses and spaces).
std::vector<std::uint32_t> parse_branching(const std::string &text);

/// Level-ordered shape of one encoding tree. The encoded (logical) qubit is
/// not a photon: the level-1 nodes carry its edges.
class TreeShape {
   public:
    explicit TreeShape(std::span<const std::uint32_t> branching);

    std::size_t size() const { return level_.size(); }
    std::size_t depth() const { return branching_.size(); }
    std::uint32_t level(std::size_t node) const { return level_[node]; }
    std::optional<std::size_t> parent(std::size_t node) const;
    std::span<const std::size_t> children(std::size_t node) const;
    std::size_t level_size(std::uint32_t level) const;
    std::size_t first_level_count() const { return branching_.front(); }

   private:
    std::vector<std::uint32_t> branching_;
    std::vector<std::uint32_t> level_;
    std::vector<std::ptrdiff_t> parent_;
    std::vector<std::vector<std::size_t>> children_;
};

enum class Side : std::uint8_t { Left = 0, Right = 1 };

inline const char *side_name(Side s) { return s == Side::Left ? "left" : "right"; }

struct PhotonRole {
    enum class Kind : std::uint8_t { Outer, InnerTree };
    Kind kind = Kind::Outer;
    Side side = Side::Left;
    std::uint32_t arm = 0;
    std::uint32_t level = 0;     // 0 for outer photons
    std::uint32_t position = 0;  // level-order index inside the tree
};

/// Tree-level photon count per arm: sum_k prod_{i<=k} b_i.
std::uint64_t tree_photons(const RgsSpec &spec);
/// Photons in one RGS: 2m (1 + tree_photons).
std::uint64_t photons_per_rgs(const RgsSpec &spec);

/// Vertex ids and roles of one RGS inside a (possibly larger) GraphState.
struct RgsLayout {
    RgsSpec spec;
    TreeShape shape;
    std::array<std::vector<VertexId>, 2> outer;              // [side][arm]
    std::array<std::vector<std::vector<VertexId>>, 2> tree;  // [side][arm][node]
    std::unordered_map<VertexId, PhotonRole> roles;

    const PhotonRole &role(VertexId v) const { return roles.at(v); }
    std::span<const VertexId> tree_vertices(Side s, std::uint32_t arm) const {
        return tree[static_cast<int>(s)][arm];
    }
    VertexId outer_vertex(Side s, std::uint32_t arm) const { return outer[static_cast<int>(s)][arm]; }
};

struct RgsInstance {
    GraphState graph;
    RgsLayout layout;
};

/// Adds an RGS to `graph`. Vertices are numbered side-major, then arm, then the
/// outer photon, then the tree in level order. `z_vops[k]` gives photon k the
/// VOP Z; an empty vector means all identity.
RgsLayout append_rgs(GraphState &graph, const RgsSpec &spec, const std::vector<bool> &z_vops = {});

RgsInstance build_rgs(const RgsSpec &spec, const std::vector<bool> &z_vops = {});

/// Order in which one half is emitted: all outer photons (by arm), then tree
/// photons level by level across arms.
std::vector<VertexId> emission_order(const RgsLayout &layout, Side side);

}  // namespace rgsim
