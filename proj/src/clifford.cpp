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

#include "rgsim/clifford.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace rgsim {
namespace {

using cd = std::complex<double>;
constexpr double kTol = 1e-9;

Matrix2 mul(const Matrix2 &a, const Matrix2 &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Matrix2 dagger(const Matrix2 &a) {
    return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])};
}

const Matrix2 &pauli_matrix(Pauli p) {
    static const std::array<Matrix2, 4> mats = {{
        {cd{1}, cd{0}, cd{0}, cd{1}},
        {cd{0}, cd{1}, cd{1}, cd{0}},
        {cd{0}, cd{0, -1}, cd{0, 1}, cd{0}},
        {cd{1}, cd{0}, cd{0}, cd{-1}},
    }};
    return mats[static_cast<int>(p)];
}

bool near(const Matrix2 &a, const Matrix2 &b, double scale) {
    for (int k = 0; k < 4; ++k) {
        if (std::abs(a[k] - scale * b[k]) > kTol) {
            return false;
        }
    }
    return true;
}

SignedPauli identify(const Matrix2 &m) {
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
        if (near(m, pauli_matrix(p), 1.0)) {
            return {p, false};
        }
        if (near(m, pauli_matrix(p), -1.0)) {
            return {p, true};
        }
    }
    throw std::logic_error("matrix does not conjugate a Pauli to a Pauli");
}

int encode(SignedPauli p) { return static_cast<int>(p.pauli) * 2 + (p.negative ? 1 : 0); }

struct Tables {
    std::array<Matrix2, 24> matrix{};
    std::array<std::string, 24> name{};
    std::array<std::array<SignedPauli, 4>, 24> image{};
    std::array<std::array<std::uint8_t, 24>, 24> product{};
    std::array<std::uint8_t, 24> inverse{};
    std::array<int, 64> by_key{};

    int key_of(const Matrix2 &m) const {
        auto ix = identify(mul(mul(m, pauli_matrix(Pauli::X)), dagger(m)));
        auto iz = identify(mul(mul(m, pauli_matrix(Pauli::Z)), dagger(m)));
        return encode(ix) * 8 + encode(iz);
    }

    Tables() {
        by_key.fill(-1);
        const double r = 1.0 / std::sqrt(2.0);
        const cd i{0, 1};
        const Matrix2 id = pauli_matrix(Pauli::I);
        auto lin = [&](cd a, const Matrix2 &p) {
            return Matrix2{r * (id[0] + a * p[0]), r * (id[1] + a * p[1]),
                           r * (id[2] + a * p[2]), r * (id[3] + a * p[3])};
        };
        const Matrix2 h{cd{r}, cd{r}, cd{r}, cd{-r}};
        const Matrix2 s{cd{1}, cd{0}, cd{0}, i};
        std::vector<std::pair<Matrix2, std::string>> seeds = {
            {id, "I"},
            {pauli_matrix(Pauli::X), "X"},
            {pauli_matrix(Pauli::Y), "Y"},
            {pauli_matrix(Pauli::Z), "Z"},
            {h, "H"},
            {s, "S"},
            {dagger(s), "Sdg"},
            {lin(-i, pauli_matrix(Pauli::X)), "SqrtX"},
            {lin(i, pauli_matrix(Pauli::X)), "SqrtXdg"},
            {lin(-i, pauli_matrix(Pauli::Y)), "SqrtY"},
            {lin(i, pauli_matrix(Pauli::Y)), "SqrtYdg"},
        };
        int count = 0;
        auto insert = [&](const Matrix2 &m, const std::string &nm) {
            int key = key_of(m);
            if (by_key[key] >= 0) {
                return;
            }
            by_key[key] = count;
            matrix[count] = m;
            name[count] = nm;
            ++count;
        };
        for (auto &[m, nm] : seeds) {
            insert(m, nm);
        }
        for (int k = 0; k < count && count < 24; ++k) {
            insert(mul(h, matrix[k]), "H*" + name[k]);
            insert(mul(s, matrix[k]), "S*" + name[k]);
        }
        if (count != 24) {
            throw std::logic_error("single-qubit Clifford group did not close at 24 elements");
        }
        for (int k = 0; k < 24; ++k) {
            for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
                image[k][static_cast<int>(p)] =
                    identify(mul(mul(matrix[k], pauli_matrix(p)), dagger(matrix[k])));
            }
            image[k][0] = {Pauli::I, false};
        }
        for (int a = 0; a < 24; ++a) {
            for (int b = 0; b < 24; ++b) {
                product[a][b] = static_cast<std::uint8_t>(by_key[key_of(mul(matrix[a], matrix[b]))]);
            }
            inverse[a] = static_cast<std::uint8_t>(by_key[key_of(dagger(matrix[a]))]);
        }
    }
};

const Tables &tables() {
    static const Tables t;
    return t;
}

}  // namespace

char pauli_char(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }

Pauli pauli_product(Pauli a, Pauli b) {
    return static_cast<Pauli>(static_cast<int>(a) ^ static_cast<int>(b));
}

LocalClifford LocalClifford::from_code(std::uint8_t code) {
    if (code >= kGroupSize) {
        throw std::out_of_range("local Clifford code out of range: " + std::to_string(code));
    }
    return LocalClifford{code};
}

LocalClifford LocalClifford::x() { return LocalClifford{1}; }
LocalClifford LocalClifford::y() { return LocalClifford{2}; }
LocalClifford LocalClifford::z() { return LocalClifford{3}; }
LocalClifford LocalClifford::h() { return LocalClifford{4}; }
LocalClifford LocalClifford::s() { return LocalClifford{5}; }
LocalClifford LocalClifford::sdg() { return LocalClifford{6}; }
LocalClifford LocalClifford::sqrt_x() { return LocalClifford{7}; }
LocalClifford LocalClifford::sqrt_x_dg() { return LocalClifford{8}; }

std::string_view LocalClifford::name() const { return tables().name[code_]; }

LocalClifford LocalClifford::operator*(LocalClifford rhs) const {
    return LocalClifford{tables().product[code_][rhs.code_]};
}

LocalClifford LocalClifford::inverse() const { return LocalClifford{tables().inverse[code_]}; }

SignedPauli LocalClifford::conjugate(Pauli p) const {
    return tables().image[code_][static_cast<int>(p)];
}

SignedPauli LocalClifford::conjugate_by_inverse(Pauli p) const {
    return tables().image[tables().inverse[code_]][static_cast<int>(p)];
}

const Matrix2 &LocalClifford::matrix() const { return tables().matrix[code_]; }

bool LocalClifford::is_diagonal() const {
    return conjugate(Pauli::Z) == SignedPauli{Pauli::Z, false};
}

}  // namespace rgsim
