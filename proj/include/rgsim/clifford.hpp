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
#include <complex>
#include <cstdint>
#include <string_view>

namespace rgsim {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);

/// A Pauli operator with a +/-1 sign.
struct SignedPauli {
    Pauli pauli = Pauli::I;
    bool negative = false;

    friend bool operator==(const SignedPauli &, const SignedPauli &) = default;
};

/// Product of two Paulis, dropping the phase. I*X = X, X*Z = Y, ...
Pauli pauli_product(Pauli a, Pauli b);

using Matrix2 = std::array<std::complex<double>, 4>;  // row-major

/// One of the 24 single-qubit Clifford operators, modulo global phase.
///
/// Elements are identified by their conjugation action on X and Z. Codes are
/// stable: 0..10 are I, X, Y, Z, H, S, Sdg, SqrtX, SqrtXdg, SqrtY, SqrtYdg and
/// the remaining 13 follow in breadth-first order over {H, S} words.
class LocalClifford {
   public:
    static constexpr std::size_t kGroupSize = 24;

    constexpr LocalClifford() = default;
    static LocalClifford from_code(std::uint8_t code);

    static LocalClifford identity() { return LocalClifford{}; }
    static LocalClifford x();
    static LocalClifford y();
    static LocalClifford z();
    static LocalClifford h();
    static LocalClifford s();
    static LocalClifford sdg();
    static LocalClifford sqrt_x();
    static LocalClifford sqrt_x_dg();

    std::uint8_t code() const { return code_; }
    std::string_view name() const;

    /// Operator product: (a * b) applies b first, then a.
    LocalClifford operator*(LocalClifford rhs) const;
    LocalClifford inverse() const;

    /// C P C^dagger.
    SignedPauli conjugate(Pauli p) const;
    /// C^dagger P C: the Pauli measured on the bare graph qubit when P is
    /// measured on the physical qubit.
    SignedPauli conjugate_by_inverse(Pauli p) const;

    const Matrix2 &matrix() const;

    /// Diagonal in the computational basis (I, Z, S, Sdg); commutes with CZ.
    bool is_diagonal() const;
    /// I or Z: the only vertex operators an emitted photon may carry.
    bool is_identity_or_z() const { return code_ == 0 || code_ == 3; }

    friend bool operator==(LocalClifford, LocalClifford) = default;

   private:
    explicit constexpr LocalClifford(std::uint8_t code) : code_(code) {}
    std::uint8_t code_ = 0;
};

}  // namespace rgsim
