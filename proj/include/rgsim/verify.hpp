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
#include <string>
#include <vector>

#include "rgsim/graph_state.hpp"

namespace rgsim {

/// Outcome of checking graph-state rules against the dense reference.
struct RuleCheckReport {
    std::size_t graphs = 0;
    std::size_t branches = 0;
    std::size_t failures = 0;
    double min_fidelity = 1.0;
    std::vector<std::string> notes;  // first few failures

    bool ok() const { return failures == 0; }
};

/// Random graph on `n` vertices with i.i.d. edges and VOPs drawn from {I, Z}.
template <class Rng>
GraphState random_graph(std::size_t n, double edge_probability, Rng &rng);

/// Compares local_complement, measure_z, measure_x and measure_xx against the
/// dense oracle on `graph_count` random graphs (2..max_vertices vertices),
/// enumerating every outcome branch. Fidelity threshold is 1 - 1e-9.
RuleCheckReport check_graph_rules(std::size_t graph_count, std::uint64_t seed, std::size_t max_vertices = 8);

}  // namespace rgsim

#include <random>

namespace rgsim {

template <class Rng>
GraphState random_graph(std::size_t n, double edge_probability, Rng &rng) {
    std::bernoulli_distribution edge(edge_probability);
    std::bernoulli_distribution zvop(0.5);
    GraphState g;
    std::vector<VertexId> ids;
    for (std::size_t i = 0; i < n; ++i) {
        ids.push_back(g.add_vertex(zvop(rng) ? LocalClifford::z() : LocalClifford::identity()));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (edge(rng)) {
                g.add_edge(ids[i], ids[j]);
            }
        }
    }
    return g;
}

}  // namespace rgsim
