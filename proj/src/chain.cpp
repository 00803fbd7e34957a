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

#include "rgsim/chain.hpp"

#include <cmath>
#include <stdexcept>

namespace rgsim {

void ChainConfig::validate() const {
    if (!(distance_km > 0) || !(rgss_spacing_km > 0)) {
        throw std::invalid_argument("distance and spacing must be positive");
    }
    if (rgss_spacing_km > distance_km) {
        throw std::invalid_argument("spacing exceeds the end-to-end distance");
    }
    if (!(attenuation_db_per_km >= 0)) {
        throw std::invalid_argument("attenuation must be non-negative");
    }
    if (!(bsm_success_cap >= 0 && bsm_success_cap <= 1)) {
        throw std::invalid_argument("bsm success cap must lie in [0, 1]");
    }
    if (!(detector_efficiency > 0 && detector_efficiency <= 1)) {
        throw std::invalid_argument("detector efficiency must lie in (0, 1]");
    }
    rgs.validate();
}

ChainTopology plan_chain(const ChainConfig &config) {
    config.validate();
    const auto segments = static_cast<std::size_t>(std::llround(config.distance_km / config.rgss_spacing_km));
    const double pitch = config.distance_km / static_cast<double>(segments);
    ChainTopology t;
    t.end_node_positions_km = {0.0, config.distance_km};
    for (std::size_t k = 1; k < segments; ++k) {
        t.rgss_positions_km.push_back(pitch * static_cast<double>(k));
    }
    for (std::size_t j = 0; j < segments; ++j) {
        t.absa_positions_km.push_back(pitch * (static_cast<double>(j) + 0.5));
    }
    t.segment_length_km = pitch / 2;
    return t;
}

double survival_probability(double length_km, double attenuation_db_per_km, double detector_efficiency) {
    if (length_km < 0) {
        throw std::invalid_argument("negative fiber length");
    }
    return detector_efficiency * std::pow(10.0, -attenuation_db_per_km * length_km / 10.0);
}

std::vector<AbsaInputs> sample_arrivals(const ChainTopology &topology, const ChainConfig &config, Rng &rng) {
    const auto &spec = config.rgs;
    const std::uint32_t stride = static_cast<std::uint32_t>(1 + tree_photons(spec));
    const std::size_t absas = topology.absa_count();
    std::vector<AbsaInputs> out(absas);

    auto end_half = [&] {
        HalfInput h{SourceKind::EndNode, spec.m, 1, std::vector<bool>(spec.m), std::vector<bool>(spec.m, false)};
        return h;
    };
    auto rgs_half = [&] {
        const std::size_t n = std::size_t{spec.m} * stride;
        HalfInput h{SourceKind::Rgss, spec.m, stride, std::vector<bool>(n), std::vector<bool>(n)};
        for (std::size_t k = 0; k < n; ++k) {
            h.vop_z[k] = rng.bit();
        }
        return h;
    };
    // Source s feeds ABSA s-1 with its left half and ABSA s with its right half.
    for (std::size_t s = 0; s <= absas; ++s) {
        const bool end = s == 0 || s == absas;
        HalfInput left = end ? end_half() : rgs_half();
        HalfInput right = end ? end_half() : rgs_half();
        if (s > 0) {
            out[s - 1][1] = std::move(left);
        }
        if (s < absas) {
            out[s][0] = std::move(right);
        }
    }
    const double p = survival_probability(topology.segment_length_km, config.attenuation_db_per_km,
                                          config.detector_efficiency);
    for (auto &inputs : out) {
        for (auto &half : inputs) {
            for (std::size_t k = 0; k < half.slots(); ++k) {
                half.arrived[k] = rng.bernoulli(p);
            }
        }
    }
    return out;
}

}  // namespace rgsim
