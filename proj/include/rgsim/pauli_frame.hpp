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
#include <string>

#include "rgsim/clifford.hpp"

namespace rgsim {

enum class EndNode : std::uint8_t { Left = 0, Right = 1 };

/// Pauli corrections the two end nodes apply to their halves of the Bell pair.
struct PauliFrame {
    std::array<Pauli, 2> corrections{Pauli::I, Pauli::I};

    Pauli at(EndNode e) const { return corrections[static_cast<int>(e)]; }
    /// Composes an extra byproduct into the frame (phase dropped).
    void apply(EndNode e, Pauli p) {
        auto &c = corrections[static_cast<int>(e)];
        c = pauli_product(c, p);
    }
    std::string to_string() const;

    friend bool operator==(const PauliFrame &, const PauliFrame &) = default;
};

}  // namespace rgsim
