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

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rgsim/clifford.hpp"

namespace rgsim {

using VertexId = std::uint32_t;

enum class Basis : std::uint8_t { X, Z };

char basis_char(Basis b);

/// Raised when a caller supplies a measurement outcome that the state cannot
/// produce (a Born probability of zero).
class ZeroProbabilityBranch : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// One physical single-qubit measurement. `outcome` is false for the +1
/// eigenvalue and true for -1; it is empty exactly when the photon was lost.
struct MeasurementRecord {
    VertexId vertex = 0;
    Basis basis = Basis::Z;
    std::optional<bool> outcome;
    bool lost = false;

    static MeasurementRecord measured(VertexId v, Basis b, bool outcome) { return {v, b, outcome, false}; }
    static MeasurementRecord loss(VertexId v, Basis b) { return {v, b, std::nullopt, true}; }
};

/// A stabilizer state stored as a graph plus one local Clifford (VOP) per
/// vertex: |psi> = (prod_v vop_v) |G>.
///
/// All measurement operations take the outcome as an argument. Vertex ids are
/// handed out in increasing order and never reused; measured vertices are
/// removed from the graph.
class GraphState {
   public:
    GraphState() = default;

    VertexId add_vertex(LocalClifford vop = LocalClifford::identity());
    /// Edge insertion on the bare graph; used when assembling resource states.
    void add_edge(VertexId u, VertexId v);

    bool contains(VertexId v) const { return nodes_.contains(v); }
    std::size_t size() const { return nodes_.size(); }
    std::vector<VertexId> vertices() const;
    const std::set<VertexId> &neighbors(VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const;
    std::size_t edge_count() const;
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    LocalClifford vop(VertexId v) const;
    void set_vop(VertexId v, LocalClifford c);

    /// When set, every public mutation checks that all VOPs are I or Z on exit.
    void set_restrict_to_identity_or_z(bool on);
    bool restricted_to_identity_or_z() const { return restrict_iz_; }

    /// Physical CZ. Both VOPs must be diagonal so the gate acts as an edge toggle.
    void apply_cz(VertexId u, VertexId v);

    /// Toggles the edges among N(v) and updates VOPs so the state is unchanged.
    void local_complement(VertexId v);

    /// Outcome if the measurement of `basis` on `v` is deterministic.
    std::optional<bool> forced_outcome(VertexId v, Basis basis) const;

    MeasurementRecord measure_z(VertexId v, bool outcome);
    /// X measurement. `special_neighbor` defaults to the smallest neighbor id.
    MeasurementRecord measure_x(VertexId v, bool outcome,
                                std::optional<VertexId> special_neighbor = std::nullopt);
    MeasurementRecord measure(VertexId v, Basis basis, bool outcome);

    /// Joint X measurement of adjacent u, v with no common neighbor. Both VOPs
    /// must map X to +/-X. Every former neighbor of u (other than v) becomes
    /// edge-toggled with every former neighbor of v; the byproduct is Z on
    /// N(u) when v's graph-level outcome is -1 and Z on N(v) when u's is.
    std::pair<MeasurementRecord, MeasurementRecord> measure_xx(VertexId u, VertexId v, bool outcome_u,
                                                               bool outcome_v);

    /// Deterministic text dump: sorted "u v" edge lines, then "vop id name" lines.
    std::string dump() const;

   private:
    struct Node {
        std::set<VertexId> adj;
        LocalClifford vop;
    };

    Node &node(VertexId v);
    const Node &node(VertexId v) const;
    void toggle_edge(VertexId u, VertexId v);
    void right_multiply_vop(VertexId v, LocalClifford c);
    void remove_vertex(VertexId v);
    void measure_graph_z(VertexId v, bool graph_outcome);
    void measure_pauli(VertexId v, Pauli p, bool outcome, std::optional<VertexId> special_neighbor);
    void check_restriction() const;

    std::map<VertexId, Node> nodes_;
    VertexId next_id_ = 0;
    bool restrict_iz_ = false;
};

}  // namespace rgsim
