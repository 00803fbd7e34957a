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

#include "rgsim/dense_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rgsim {

using cd = std::complex<double>;

std::string PauliFrame::to_string() const {
    return std::string{pauli_char(corrections[0]), pauli_char(corrections[1])};
}

DenseState::DenseState(std::vector<VertexId> qubit_order, std::vector<cd> amplitudes)
    : order_(std::move(qubit_order)), amps_(std::move(amplitudes)) {
    if (order_.size() > kMaxQubits) {
        throw std::invalid_argument("dense state limited to " + std::to_string(kMaxQubits) + " qubits");
    }
    if (amps_.size() != (std::size_t{1} << order_.size())) {
        throw std::invalid_argument("amplitude vector length does not match qubit count");
    }
    auto sorted = order_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("duplicate qubit in ordering");
    }
}

DenseState DenseState::from_graph(const GraphState &state) {
    auto order = state.vertices();
    if (order.size() > kMaxQubits) {
        throw std::invalid_argument("graph has " + std::to_string(order.size()) + " vertices; dense cap is " +
                                    std::to_string(kMaxQubits));
    }
    const std::size_t dim = std::size_t{1} << order.size();
    std::vector<cd> amps(dim, cd{1.0 / std::sqrt(static_cast<double>(dim))});
    DenseState out(order, std::move(amps));
    for (auto [u, v] : state.edges()) {
        out.apply_cz(u, v);
    }
    for (VertexId v : order) {
        out.apply_single(v, state.vop(v).matrix());
    }
    return out;
}

double DenseState::norm() const {
    double s = 0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

std::size_t DenseState::index_of(VertexId q) const {
    auto it = std::find(order_.begin(), order_.end(), q);
    if (it == order_.end()) {
        throw std::out_of_range("qubit " + std::to_string(q) + " not in dense state");
    }
    return static_cast<std::size_t>(it - order_.begin());
}

void DenseState::apply_single(VertexId q, const Matrix2 &u) {
    const std::size_t bit = std::size_t{1} << index_of(q);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) {
            continue;
        }
        cd a0 = amps_[i];
        cd a1 = amps_[i | bit];
        amps_[i] = u[0] * a0 + u[1] * a1;
        amps_[i | bit] = u[2] * a0 + u[3] * a1;
    }
}

void DenseState::apply_pauli(VertexId q, Pauli p) {
    static const std::array<Matrix2, 4> mats = {{
        {cd{1}, cd{0}, cd{0}, cd{1}},
        {cd{0}, cd{1}, cd{1}, cd{0}},
        {cd{0}, cd{0, -1}, cd{0, 1}, cd{0}},
        {cd{1}, cd{0}, cd{0}, cd{-1}},
    }};
    apply_single(q, mats[static_cast<int>(p)]);
}

void DenseState::apply_cz(VertexId a, VertexId b) {
    const std::size_t mask = (std::size_t{1} << index_of(a)) | (std::size_t{1} << index_of(b));
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & mask) == mask) {
            amps_[i] = -amps_[i];
        }
    }
}

std::pair<DenseState, double> DenseState::project_pauli(VertexId q, Pauli basis, bool outcome) const {
    const std::size_t k = index_of(q);
    const double r = 1.0 / std::sqrt(2.0);
    // Eigenvector (e0, e1) of the requested basis and sign.
    cd e0;
    cd e1;
    switch (basis) {
        case Pauli::Z:
            e0 = outcome ? cd{0} : cd{1};
            e1 = outcome ? cd{1} : cd{0};
            break;
        case Pauli::X:
            e0 = r;
            e1 = outcome ? -r : r;
            break;
        case Pauli::Y:
            e0 = r;
            e1 = outcome ? cd{0, -r} : cd{0, r};
            break;
        case Pauli::I:
            throw std::invalid_argument("cannot project onto the identity");
    }
    std::vector<VertexId> order;
    for (std::size_t i = 0; i < order_.size(); ++i) {
        if (i != k) {
            order.push_back(order_[i]);
        }
    }
    std::vector<cd> amps(amps_.size() / 2);
    const std::size_t low = (std::size_t{1} << k) - 1;
    for (std::size_t j = 0; j < amps.size(); ++j) {
        std::size_t base = (j & low) | ((j & ~low) << 1);
        amps[j] = std::conj(e0) * amps_[base] + std::conj(e1) * amps_[base | (std::size_t{1} << k)];
    }
    double p = 0;
    for (const auto &a : amps) {
        p += std::norm(a);
    }
    if (p < 1e-12) {
        throw ZeroProbabilityBranch("projection of qubit " + std::to_string(q) + " has probability 0");
    }
    const double scale = 1.0 / std::sqrt(p);
    for (auto &a : amps) {
        a *= scale;
    }
    return {DenseState(std::move(order), std::move(amps)), p};
}

double DenseState::fidelity(const DenseState &other) const {
    if (order_ != other.order_) {
        throw std::invalid_argument("fidelity between states with different qubit orderings");
    }
    cd overlap{0};
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        overlap += std::conj(amps_[i]) * other.amps_[i];
    }
    return std::norm(overlap);
}

double bell_fidelity(const DenseState &state, VertexId left, VertexId right, const PauliFrame &frame) {
    if (state.qubit_count() != 2) {
        throw std::invalid_argument("Bell fidelity needs exactly two remaining qubits, got " +
                                    std::to_string(state.qubit_count()));
    }
    DenseState corrected = state;
    corrected.apply_pauli(left, frame.at(EndNode::Left));
    corrected.apply_pauli(right, frame.at(EndNode::Right));
    GraphState bell;
    VertexId a = bell.add_vertex();
    VertexId b = bell.add_vertex();
    bell.add_edge(a, b);
    auto ideal = DenseState::from_graph(bell);
    // CZ|++> is symmetric, so only the ordering of the two ids matters.
    DenseState relabeled(corrected.qubit_order(), ideal.amplitudes());
    return relabeled.fidelity(corrected);
}

}  // namespace rgsim
