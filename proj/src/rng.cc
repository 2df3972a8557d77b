// Copyright 2026 The braidgate Authors
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

#include "braidgate/rng.h"

#include <cmath>
#include <numbers>

namespace braidgate {

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    double u1 = uniform();
    double u2 = uniform();
    // 1 - u1 lies in (0, 1], keeping the log finite.
    return std::sqrt(-2.0 * std::log(1.0 - u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

uint64_t Rng::below(uint64_t bound) {
    // Rejection sampling removes modulo bias.
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

Complex Rng::unit_complex() {
    return std::polar(1.0, 2.0 * std::numbers::pi * uniform());
}

Complex Rng::complex_normal() {
    double re = normal();
    double im = normal();
    return {re, im};
}

std::array<Complex, 2> Rng::qubit_state() {
    Complex a = complex_normal();
    Complex b = complex_normal();
    double norm = std::sqrt(std::norm(a) + std::norm(b));
    return {a / norm, b / norm};
}

ComplexMatrix random_matrix(size_t dim, Rng &rng) {
    std::vector<Complex> e(dim * dim);
    for (auto &z : e) {
        z = rng.complex_normal();
    }
    return ComplexMatrix(dim, std::move(e));
}

ComplexMatrix random_unitary(size_t dim, Rng &rng) {
    // Orthonormalize columns with modified Gram-Schmidt.
    std::vector<std::vector<Complex>> cols(dim, std::vector<Complex>(dim));
    for (auto &col : cols) {
        for (auto &z : col) {
            z = rng.complex_normal();
        }
    }
    for (size_t j = 0; j < dim; j++) {
        for (size_t k = 0; k < j; k++) {
            Complex proj{};
            for (size_t r = 0; r < dim; r++) {
                proj += std::conj(cols[k][r]) * cols[j][r];
            }
            for (size_t r = 0; r < dim; r++) {
                cols[j][r] -= proj * cols[k][r];
            }
        }
        double norm = 0;
        for (const auto &z : cols[j]) {
            norm += std::norm(z);
        }
        norm = std::sqrt(norm);
        for (auto &z : cols[j]) {
            z /= norm;
        }
    }
    std::vector<Complex> e(dim * dim);
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            e[r * dim + c] = cols[c][r];
        }
    }
    return ComplexMatrix(dim, std::move(e));
}

std::vector<Complex> random_amplitudes(size_t dim, Rng &rng) {
    std::vector<Complex> out(dim);
    double norm = 0;
    for (auto &z : out) {
        z = rng.complex_normal();
        norm += std::norm(z);
    }
    norm = std::sqrt(norm);
    for (auto &z : out) {
        z /= norm;
    }
    return out;
}

}  // namespace braidgate
