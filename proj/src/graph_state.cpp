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

#include "rgsim/graph_state.hpp"

#include <algorithm>
#include <sstream>

namespace rgsim {

char basis_char(Basis b) { return b == Basis::X ? 'X' : 'Z'; }

namespace {

Pauli to_pauli(Basis b) { return b == Basis::X ? Pauli::X : Pauli::Z; }

}  // namespace

VertexId GraphState::add_vertex(LocalClifford vop) {
    VertexId id = next_id_++;
    nodes_.emplace(id, Node{{}, vop});
    check_restriction();
    return id;
}

void GraphState::add_edge(VertexId u, VertexId v) {
    if (u == v) {
        throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    }
    node(u).adj.insert(v);
    node(v).adj.insert(u);
}

std::vector<VertexId> GraphState::vertices() const {
    std::vector<VertexId> out;
    out.reserve(nodes_.size());
    for (const auto &[id, n] : nodes_) {
        out.push_back(id);
    }
    return out;
}

const std::set<VertexId> &GraphState::neighbors(VertexId v) const { return node(v).adj; }

bool GraphState::has_edge(VertexId u, VertexId v) const { return node(u).adj.contains(v); }

std::size_t GraphState::edge_count() const {
    std::size_t twice = 0;
    for (const auto &[id, n] : nodes_) {
        twice += n.adj.size();
    }
    return twice / 2;
}

std::vector<std::pair<VertexId, VertexId>> GraphState::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (const auto &[u, n] : nodes_) {
        for (VertexId v : n.adj) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

LocalClifford GraphState::vop(VertexId v) const { return node(v).vop; }

void GraphState::set_vop(VertexId v, LocalClifford c) {
    node(v).vop = c;
    check_restriction();
}

void GraphState::set_restrict_to_identity_or_z(bool on) {
    restrict_iz_ = on;
    check_restriction();
}

GraphState::Node &GraphState::node(VertexId v) {
    auto it = nodes_.find(v);
    if (it == nodes_.end()) {
        throw std::out_of_range("unknown vertex " + std::to_string(v));
    }
    return it->second;
}

const GraphState::Node &GraphState::node(VertexId v) const {
    auto it = nodes_.find(v);
    if (it == nodes_.end()) {
        throw std::out_of_range("unknown vertex " + std::to_string(v));
    }
    return it->second;
}

void GraphState::toggle_edge(VertexId u, VertexId v) {
    auto &nu = node(u).adj;
    auto &nv = node(v).adj;
    if (nu.erase(v) > 0) {
        nv.erase(u);
    } else {
        nu.insert(v);
        nv.insert(u);
    }
}

void GraphState::right_multiply_vop(VertexId v, LocalClifford c) {
    auto &n = node(v);
    n.vop = n.vop * c;
}

void GraphState::remove_vertex(VertexId v) {
    auto &n = node(v);
    for (VertexId w : n.adj) {
        nodes_.at(w).adj.erase(v);
    }
    nodes_.erase(v);
}

void GraphState::check_restriction() const {
    if (!restrict_iz_) {
        return;
    }
    for (const auto &[id, n] : nodes_) {
        if (!n.vop.is_identity_or_z()) {
            throw std::logic_error("vertex " + std::to_string(id) + " carries VOP " +
                                   std::string(n.vop.name()) + " outside {I, Z}");
        }
    }
}

void GraphState::apply_cz(VertexId u, VertexId v) {
    if (u == v) {
        throw std::invalid_argument("CZ needs two distinct vertices");
    }
    const auto &nu = node(u);
    const auto &nv = node(v);
    if (!nu.vop.is_diagonal() || !nv.vop.is_diagonal()) {
        throw std::invalid_argument("CZ on vertices " + std::to_string(u) + "," + std::to_string(v) +
                                    " requires diagonal VOPs");
    }
    toggle_edge(u, v);
    check_restriction();
}

// |tau_v(G)> = sqrt(-iX_v) prod_{b in N(v)} sqrt(iZ_b) |G>, so the VOPs absorb
// the inverses: SqrtX^dagger on v and Sdg^dagger = S on each neighbor.
void GraphState::local_complement(VertexId v) {
    std::vector<VertexId> nb(node(v).adj.begin(), node(v).adj.end());
    for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
            toggle_edge(nb[i], nb[j]);
        }
    }
    right_multiply_vop(v, LocalClifford::sqrt_x_dg());
    for (VertexId b : nb) {
        right_multiply_vop(b, LocalClifford::s());
    }
    check_restriction();
}

std::optional<bool> GraphState::forced_outcome(VertexId v, Basis basis) const {
    const auto &n = node(v);
    SignedPauli q = n.vop.conjugate_by_inverse(to_pauli(basis));
    if (n.adj.empty() && q.pauli == Pauli::X) {
        return q.negative;
    }
    return std::nullopt;
}

void GraphState::measure_graph_z(VertexId v, bool graph_outcome) {
    if (graph_outcome) {
        for (VertexId b : node(v).adj) {
            right_multiply_vop(b, LocalClifford::z());
        }
    }
    remove_vertex(v);
}

// Reduces every Pauli measurement to a bare-graph Z measurement with
// state-preserving local complementations: Y -> LC(v) -> Z, and
// X -> LC(b0) -> Y -> ... -> LC(b0).
void GraphState::measure_pauli(VertexId v, Pauli p, bool outcome, std::optional<VertexId> special_neighbor) {
    SignedPauli q = node(v).vop.conjugate_by_inverse(p);
    bool graph_outcome = outcome != q.negative;
    switch (q.pauli) {
        case Pauli::Z:
            measure_graph_z(v, graph_outcome);
            return;
        case Pauli::Y: {
            local_complement(v);
            SignedPauli after = node(v).vop.conjugate_by_inverse(p);
            if (after.pauli != Pauli::Z) {
                throw std::logic_error("Y reduction did not yield a Z measurement");
            }
            measure_graph_z(v, outcome != after.negative);
            return;
        }
        case Pauli::X: {
            const auto &adj = node(v).adj;
            if (adj.empty()) {
                if (graph_outcome) {
                    throw ZeroProbabilityBranch("isolated vertex " + std::to_string(v) +
                                                " is an X eigenstate; outcome has probability 0");
                }
                remove_vertex(v);
                return;
            }
            VertexId b0 = special_neighbor.value_or(*adj.begin());
            local_complement(b0);
            if (node(v).vop.conjugate_by_inverse(p).pauli != Pauli::Y) {
                throw std::logic_error("X reduction did not yield a Y measurement");
            }
            measure_pauli(v, p, outcome, std::nullopt);
            local_complement(b0);
            return;
        }
        case Pauli::I:
            break;
    }
    throw std::logic_error("measurement of the identity");
}

MeasurementRecord GraphState::measure_z(VertexId v, bool outcome) {
    auto forced = forced_outcome(v, Basis::Z);
    if (forced && *forced != outcome) {
        throw ZeroProbabilityBranch("Z outcome on vertex " + std::to_string(v) + " has probability 0");
    }
    measure_pauli(v, Pauli::Z, outcome, std::nullopt);
    check_restriction();
    return MeasurementRecord::measured(v, Basis::Z, outcome);
}

MeasurementRecord GraphState::measure_x(VertexId v, bool outcome, std::optional<VertexId> special_neighbor) {
    if (special_neighbor && !node(v).adj.contains(*special_neighbor)) {
        throw std::invalid_argument("special neighbor " + std::to_string(*special_neighbor) +
                                    " is not adjacent to " + std::to_string(v));
    }
    measure_pauli(v, Pauli::X, outcome, special_neighbor);
    check_restriction();
    return MeasurementRecord::measured(v, Basis::X, outcome);
}

MeasurementRecord GraphState::measure(VertexId v, Basis basis, bool outcome) {
    return basis == Basis::X ? measure_x(v, outcome) : measure_z(v, outcome);
}

std::pair<MeasurementRecord, MeasurementRecord> GraphState::measure_xx(VertexId u, VertexId v, bool outcome_u,
                                                                       bool outcome_v) {
    if (!has_edge(u, v)) {
        throw std::invalid_argument("XX measurement needs adjacent vertices; " + std::to_string(u) + " and " +
                                    std::to_string(v) + " are not");
    }
    std::vector<VertexId> side_u;
    std::vector<VertexId> side_v;
    for (VertexId w : node(u).adj) {
        if (w != v) {
            side_u.push_back(w);
        }
    }
    for (VertexId w : node(v).adj) {
        if (w == u) {
            continue;
        }
        if (node(u).adj.contains(w)) {
            throw std::invalid_argument("XX measurement on " + std::to_string(u) + "," + std::to_string(v) +
                                        " with shared neighbor " + std::to_string(w));
        }
        side_v.push_back(w);
    }
    SignedPauli qu = node(u).vop.conjugate_by_inverse(Pauli::X);
    SignedPauli qv = node(v).vop.conjugate_by_inverse(Pauli::X);
    if (qu.pauli != Pauli::X || qv.pauli != Pauli::X) {
        throw std::invalid_argument("XX measurement requires VOPs that map X to +/-X");
    }
    bool gu = outcome_u != qu.negative;
    bool gv = outcome_v != qv.negative;
    for (VertexId a : side_u) {
        for (VertexId b : side_v) {
            toggle_edge(a, b);
        }
    }
    if (gv) {
        for (VertexId a : side_u) {
            right_multiply_vop(a, LocalClifford::z());
        }
    }
    if (gu) {
        for (VertexId b : side_v) {
            right_multiply_vop(b, LocalClifford::z());
        }
    }
    remove_vertex(u);
    remove_vertex(v);
    check_restriction();
    return {MeasurementRecord::measured(u, Basis::X, outcome_u), MeasurementRecord::measured(v, Basis::X, outcome_v)};
}

std::string GraphState::dump() const {
    std::ostringstream out;
    for (auto [u, v] : edges()) {
        out << u << ' ' << v << '\n';
    }
    for (const auto &[id, n] : nodes_) {
        out << "vop " << id << ' ' << n.vop.name() << '\n';
    }
    return out.str();
}

}  // namespace rgsim
