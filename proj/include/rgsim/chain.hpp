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
#include <vector>

#include "rgsim/random.hpp"
#include "rgsim/rgs.hpp"

namespace rgsim {

struct ChainConfig {
    double distance_km = 1000.0;
    double rgss_spacing_km = 4.0;
    double attenuation_db_per_km = 0.2;
    double bsm_success_cap = 0.5;
    double detector_efficiency = 1.0;
    RgsSpec rgs{};
    std::uint64_t rng_seed = 1;

    /// Throws std::invalid_argument on non-positive lengths, spacing larger
    /// than the distance, or probabilities outside [0, 1].
    void validate() const;
};

/// Sources are indexed 0..N+1: 0 and N+1 are the end nodes, 1..N the RGSSs.
/// ABSA j sits between source j and source j+1.
struct ChainTopology {
    std::vector<double> rgss_positions_km;
    std::vector<double> absa_positions_km;
    std::array<double, 2> end_node_positions_km{0.0, 0.0};
    /// Fiber length from each source to the ABSA it feeds; all equal.
    double segment_length_km = 0.0;

    std::size_t rgss_count() const { return rgss_positions_km.size(); }
    std::size_t absa_count() const { return absa_positions_km.size(); }
};

/// N = round(distance / spacing) - 1 RGSSs evenly placed, ABSAs at midpoints.
ChainTopology plan_chain(const ChainConfig &config);

double survival_probability(double length_km, double attenuation_db_per_km, double detector_efficiency);

enum class SourceKind : std::uint8_t { EndNode, Rgss };

/// Photons one source sends to one ABSA, indexed by slot = arm * stride + k.
/// For an RGS half k = 0 is the outer photon and k = 1 + node the tree photon;
/// an end node sends one photon per memory (stride 1).
struct HalfInput {
    SourceKind kind = SourceKind::Rgss;
    std::uint32_t m = 0;
    std::uint32_t stride = 1;
    std::vector<bool> arrived;
    std::vector<bool> vop_z;

    std::size_t slots() const { return arrived.size(); }
    std::size_t slot(std::uint32_t arm, std::size_t k) const { return arm * std::size_t{stride} + k; }
};

/// Inputs of one ABSA: [0] from the source on its left, [1] from the right.
using AbsaInputs = std::array<HalfInput, 2>;

/// Builds every ABSA's inputs: RGS photons get a Z VOP with probability 1/2
/// (drawn per source, left half then right half), end-node photons identity;
/// then each photon survives independently with the segment survival
/// probability.
std::vector<AbsaInputs> sample_arrivals(const ChainTopology &topology, const ChainConfig &config, Rng &rng);

}  // namespace rgsim
