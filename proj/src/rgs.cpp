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

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rgsim {

void RgsSpec::validate() const {
    if (m < 1) {
        throw std::invalid_argument("RGS needs m >= 1");
    }
    if (branching.empty()) {
        throw std::invalid_argument("branching vector must have at least one level");
    }
    for (auto b : branching) {
        if (b < 1) {
            throw std::invalid_argument("branching entries must be >= 1");
        }
    }
}

std::string RgsSpec::to_string() const {
    std::ostringstream out;
    out << "m=" << m << " b=(";
    for (std::size_t i = 0; i < branching.size(); ++i) {
        out << (i ? "," : "") << branching[i];
    }
    out << ")";
    return out.str();
}

std::vector<std::uint32_t> parse_branching(const std::string &text) {
    std::vector<std::uint32_t> out;
    std::string token;
    auto flush = [&] {
        if (token.empty()) {
            return;
        }
        std::size_t used = 0;
        long long v = std::stoll(token, &used);
        if (used != token.size() || v < 1) {
            throw std::invalid_argument("bad branching entry '" + token + "'");
        }
        out.push_back(static_cast<std::uint32_t>(v));
        token.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ';' || c == ' ' || c == '(' || c == ')') {
            flush();
        } else {
            token.push_back(c);
        }
    }
    flush();
    if (out.empty()) {
        throw std::invalid_argument("empty branching vector '" + text + "'");
    }
    return out;
}

TreeShape::TreeShape(std::span<const std::uint32_t> branching) : branching_(branching.begin(), branching.end()) {
    if (branching_.empty()) {
        throw std::invalid_argument("tree needs at least one level");
    }
    std::vector<std::size_t> previous;
    for (std::size_t k = 0; k < branching_.size(); ++k) {
        std::vector<std::size_t> current;
        auto add = [&](std::ptrdiff_t parent) {
            std::size_t id = level_.size();
            level_.push_back(static_cast<std::uint32_t>(k + 1));
            parent_.push_back(parent);
            children_.emplace_back();
            if (parent >= 0) {
                children_[static_cast<std::size_t>(parent)].push_back(id);
            }
            current.push_back(id);
        };
        if (k == 0) {
            for (std::uint32_t i = 0; i < branching_[0]; ++i) {
                add(-1);
            }
        } else {
            for (std::size_t p : previous) {
                for (std::uint32_t i = 0; i < branching_[k]; ++i) {
                    add(static_cast<std::ptrdiff_t>(p));
                }
            }
        }
        previous = std::move(current);
    }
}

std::optional<std::size_t> TreeShape::parent(std::size_t node) const {
    if (parent_[node] < 0) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(parent_[node]);
}

std::span<const std::size_t> TreeShape::children(std::size_t node) const { return children_[node]; }

std::size_t TreeShape::level_size(std::uint32_t level) const {
    return static_cast<std::size_t>(std::count(level_.begin(), level_.end(), level));
}

std::uint64_t tree_photons(const RgsSpec &spec) {
    std::uint64_t total = 0;
    std::uint64_t width = 1;
    for (auto b : spec.branching) {
        width *= b;
        total += width;
    }
    return total;
}

std::uint64_t photons_per_rgs(const RgsSpec &spec) {
    spec.validate();
    return 2ULL * spec.m * (1 + tree_photons(spec));
}

RgsLayout append_rgs(GraphState &graph, const RgsSpec &spec, const std::vector<bool> &z_vops) {
    spec.validate();
    RgsLayout layout{spec, TreeShape(spec.branching), {}, {}, {}};
    const auto &shape = layout.shape;
    if (!z_vops.empty() && z_vops.size() != photons_per_rgs(spec)) {
        throw std::invalid_argument("VOP assignment has " + std::to_string(z_vops.size()) + " entries, RGS has " +
                                    std::to_string(photons_per_rgs(spec)) + " photons");
    }
    std::size_t photon = 0;
    auto next_vop = [&] {
        bool z = !z_vops.empty() && z_vops[photon];
        ++photon;
        return z ? LocalClifford::z() : LocalClifford::identity();
    };
    for (Side side : {Side::Left, Side::Right}) {
        const int s = static_cast<int>(side);
        for (std::uint32_t arm = 0; arm < spec.m; ++arm) {
            VertexId o = graph.add_vertex(next_vop());
            layout.outer[s].push_back(o);
            layout.roles[o] = PhotonRole{PhotonRole::Kind::Outer, side, arm, 0, 0};
            std::vector<VertexId> nodes;
            for (std::size_t k = 0; k < shape.size(); ++k) {
                VertexId v = graph.add_vertex(next_vop());
                nodes.push_back(v);
                layout.roles[v] = PhotonRole{PhotonRole::Kind::InnerTree, side, arm, shape.level(k),
                                             static_cast<std::uint32_t>(k)};
                if (auto p = shape.parent(k)) {
                    graph.add_edge(nodes[*p], v);
                } else {
                    graph.add_edge(o, v);
                }
            }
            layout.tree[s].push_back(std::move(nodes));
        }
    }
    // Complete graph between logical inner qubits: every first-level photon of
    // one tree is joined to every first-level photon of each other tree.
    std::vector<std::vector<VertexId>> first_levels;
    for (int s = 0; s < 2; ++s) {
        for (const auto &nodes : layout.tree[s]) {
            first_levels.emplace_back(nodes.begin(), nodes.begin() + static_cast<std::ptrdiff_t>(shape.first_level_count()));
        }
    }
    for (std::size_t a = 0; a < first_levels.size(); ++a) {
        for (std::size_t b = a + 1; b < first_levels.size(); ++b) {
            for (VertexId u : first_levels[a]) {
                for (VertexId v : first_levels[b]) {
                    graph.add_edge(u, v);
                }
            }
        }
    }
    return layout;
}

RgsInstance build_rgs(const RgsSpec &spec, const std::vector<bool> &z_vops) {
    RgsInstance out{GraphState{}, RgsLayout{spec, TreeShape(spec.branching), {}, {}, {}}};
    out.layout = append_rgs(out.graph, spec, z_vops);
    return out;
}

std::vector<VertexId> emission_order(const RgsLayout &layout, Side side) {
    const int s = static_cast<int>(side);
    std::vector<VertexId> order(layout.outer[s].begin(), layout.outer[s].end());
    // Tree nodes are stored level by level, so a stable pass per level keeps
    // level order across arms.
    for (std::uint32_t level = 1; level <= layout.shape.depth(); ++level) {
        for (const auto &nodes : layout.tree[s]) {
            for (std::size_t k = 0; k < nodes.size(); ++k) {
                if (layout.shape.level(k) == level) {
                    order.push_back(nodes[k]);
                }
            }
        }
    }
    return order;
}

}  // namespace rgsim
