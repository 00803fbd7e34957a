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

#include "rgsim/tree_measure.hpp"

#include <stdexcept>

namespace rgsim {

Basis pattern_basis(Basis logical, std::uint32_t level) {
    bool odd = level % 2 == 1;
    if (logical == Basis::Z) {
        return odd ? Basis::Z : Basis::X;
    }
    return odd ? Basis::X : Basis::Z;
}

namespace {

class Decoder {
   public:
    Decoder(const TreeShape &shape, const std::vector<bool> &arrived, const std::vector<bool> *outcomes,
            const std::vector<bool> *vop_z)
        : shape_(shape), arrived_(arrived), outcomes_(outcomes), vop_z_(vop_z) {
        if (arrived.size() != shape.size() || (outcomes && outcomes->size() != shape.size()) ||
            (vop_z && vop_z->size() != shape.size())) {
            throw std::invalid_argument("per-photon vectors must match the tree size");
        }
    }

    // Z value of a Z-pattern node: direct, else through the first child whose
    // X succeeds.
    std::optional<bool> z(std::size_t node) const {
        if (arrived_[node]) {
            return outcomes_ ? (*outcomes_)[node] : false;
        }
        for (std::size_t g : shape_.children(node)) {
            if (auto v = x(g)) {
                return v;
            }
        }
        return std::nullopt;
    }

    // X of an X-pattern node times Z of all its children; this equals the Z
    // value of its parent (or the logical X for a first-level node).
    std::optional<bool> x(std::size_t node) const {
        if (!arrived_[node]) {
            return std::nullopt;
        }
        bool value = outcomes_ ? ((*outcomes_)[node] != (*vop_z_)[node]) : false;
        for (std::size_t h : shape_.children(node)) {
            auto zh = z(h);
            if (!zh) {
                return std::nullopt;
            }
            value = value != *zh;
        }
        return value;
    }

    LogicalResult logical(Basis basis) const {
        LogicalResult out;
        const std::size_t first = shape_.first_level_count();
        if (basis == Basis::Z) {
            out.success = true;
            for (std::size_t c = 0; c < first; ++c) {
                auto zc = z(c);
                if (!zc) {
                    return {};
                }
                out.outcome = out.outcome != *zc;
            }
            return out;
        }
        for (std::size_t c = 0; c < first; ++c) {
            if (auto xc = x(c)) {
                return {true, *xc};
            }
        }
        return {};
    }

   private:
    const TreeShape &shape_;
    const std::vector<bool> &arrived_;
    const std::vector<bool> *outcomes_;
    const std::vector<bool> *vop_z_;
};

}  // namespace

bool logical_success(const TreeShape &shape, Basis logical, const std::vector<bool> &arrived) {
    return Decoder(shape, arrived, nullptr, nullptr).logical(logical).success;
}

LogicalResult decode_logical(const TreeShape &shape, Basis logical, const std::vector<bool> &arrived,
                             const std::vector<bool> &outcomes, const std::vector<bool> &vop_z) {
    return Decoder(shape, arrived, &outcomes, &vop_z).logical(logical);
}

LogicalMeasurement logical_measure(const TreeShape &shape, std::span<const VertexId> vertices, Basis logical,
                                   const std::vector<bool> &arrived, const std::vector<bool> &vop_z,
                                   const PhotonMeasurer &measure) {
    if (vertices.size() != shape.size()) {
        throw std::invalid_argument("vertex list must match the tree size");
    }
    LogicalMeasurement out;
    std::vector<bool> outcomes(shape.size(), false);
    for (std::size_t k = 0; k < shape.size(); ++k) {
        Basis b = pattern_basis(logical, shape.level(k));
        if (arrived[k]) {
            outcomes[k] = measure(k, b);
            out.records.push_back(MeasurementRecord::measured(vertices[k], b, outcomes[k]));
        } else {
            out.records.push_back(MeasurementRecord::loss(vertices[k], b));
        }
    }
    out.result = decode_logical(shape, logical, arrived, outcomes, vop_z);
    return out;
}

}  // namespace rgsim
