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

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "rgsim/graph_state.hpp"
#include "rgsim/pauli_frame.hpp"

namespace rgsim {

/// Dense state vector over a sorted list of vertex ids. Qubit k of the
/// ordering is bit k of the amplitude index. Reference implementation only.
class DenseState {
   public:
    static constexpr std::size_t kMaxQubits = 22;

    DenseState(std::vector<VertexId> qubit_order, std::vector<std::complex<double>> amplitudes);

    /// |+>^n, then CZ per edge, then each VOP.
    static DenseState from_graph(const GraphState &state);

    const std::vector<VertexId> &qubit_order() const { return order_; }
    const std::vector<std::complex<double>> &amplitudes() const { return amps_; }
    std::size_t qubit_count() const { return order_.size(); }
    double norm() const;

    void apply_single(VertexId q, const Matrix2 &u);
    void apply_pauli(VertexId q, Pauli p);
    void apply_cz(VertexId a, VertexId b);

    /// Projects `q` onto the eigenstate of `basis` for `outcome` and removes the
    /// qubit. Returns the normalized remainder and the Born probability.
    /// Throws ZeroProbabilityBranch when the probability vanishes.
    std::pair<DenseState, double> project_pauli(VertexId q, Pauli basis, bool outcome) const;

    /// |<this|other>|^2; both states must share the qubit ordering.
    double fidelity(const DenseState &other) const;

   private:
    std::size_t index_of(VertexId q) const;

    std::vector<VertexId> order_;
    std::vector<std::complex<double>> amps_;
};

/// Fidelity of the frame-corrected two-qubit state with CZ|++> on (left, right).
double bell_fidelity(const DenseState &state, VertexId left, VertexId right, const PauliFrame &frame);

}  // namespace rgsim
