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

#include <functional>
#include <span>
#include <vector>

#include "rgsim/graph_state.hpp"
#include "rgsim/rgs.hpp"

namespace rgsim {

/// Physical basis for a photon at `level` (1-based) during a logical
/// measurement: logical Z uses Z on odd levels and X on even levels, logical X
/// the reverse.
Basis pattern_basis(Basis logical, std::uint32_t level);

/// Whether the logical measurement succeeds for the given arrival pattern.
/// A first-level Z result is available directly, or indirectly through a child
/// whose X succeeded together with Z results (direct or indirect) of all its
/// children.
bool logical_success(const TreeShape &shape, Basis logical, const std::vector<bool> &arrived);

struct LogicalResult {
    bool success = false;
    bool outcome = false;  // meaningful only on success
};

/// Combines raw photon outcomes into the logical outcome. `outcomes[k]` is the
/// detector bit of node k (ignored for lost nodes); `vop_z[k]` marks a Z VOP,
/// which flips X results only.
LogicalResult decode_logical(const TreeShape &shape, Basis logical, const std::vector<bool> &arrived,
                             const std::vector<bool> &outcomes, const std::vector<bool> &vop_z);

struct LogicalMeasurement {
    LogicalResult result;
    std::vector<MeasurementRecord> records;  // one per tree photon, level order
};

/// Called once per arrived photon with its node index and pattern basis;
/// returns the raw detector bit.
using PhotonMeasurer = std::function<bool(std::size_t node, Basis basis)>;

LogicalMeasurement logical_measure(const TreeShape &shape, std::span<const VertexId> vertices, Basis logical,
                                   const std::vector<bool> &arrived, const std::vector<bool> &vop_z,
                                   const PhotonMeasurer &measure);

}  // namespace rgsim
