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

#include "braidgate/entangle.h"

#include <cmath>

#include "braidgate/gates.h"
#include "braidgate/rng.h"

namespace braidgate {

namespace {

void require_unitary_two_qubit(const ComplexMatrix &g, const char *what) {
    if (g.dim() != 4) {
        throw DimensionError(std::string(what) + " needs a 4x4 gate");
    }
    if (!is_unitary(g, Tolerance::phase())) {
        throw std::invalid_argument(std::string(what) + " needs a unitary gate");
    }
}

double det_of_image(const ComplexMatrix &g, const std::array<Complex, 2> &x, const std::array<Complex, 2> &y) {
    std::array<Complex, 4> in{x[0] * y[0], x[0] * y[1], x[1] * y[0], x[1] * y[1]};
    std::array<Complex, 4> out{};
    for (size_t r = 0; r < 4; r++) {
        for (size_t c = 0; c < 4; c++) {
            out[r] += g(r, c) * in[c];
        }
    }
    return std::abs(out[0] * out[3] - out[1] * out[2]);
}

}  // namespace

bool state_is_entangled(std::span<const Complex> psi, Tolerance tol) {
    if (psi.size() != 4) {
        throw DimensionError("two-qubit state needs 4 amplitudes");
    }
    if (std::abs(psi[0]) == 0 && std::abs(psi[1]) == 0 && std::abs(psi[2]) == 0 && std::abs(psi[3]) == 0) {
        throw std::invalid_argument("zero vector is not a state");
    }
    return std::abs(psi[0] * psi[3] - psi[1] * psi[2]) > tol.eps;
}

ComplexMatrix realign(const ComplexMatrix &g) {
    if (g.dim() != 4) {
        throw DimensionError("realign needs a 4x4 matrix");
    }
    std::vector<Complex> e(16);
    for (size_t i = 0; i < 2; i++) {
        for (size_t k = 0; k < 2; k++) {
            for (size_t j = 0; j < 2; j++) {
                for (size_t l = 0; l < 2; l++) {
                    e[(2 * i + j) * 4 + (2 * k + l)] = g(2 * i + k, 2 * j + l);
                }
            }
        }
    }
    return ComplexMatrix(4, std::move(e));
}

EntanglingVerdict is_entangling(const ComplexMatrix &g, Tolerance tol, uint64_t seed) {
    require_unitary_two_qubit(g, "is_entangling");
    EntanglingVerdict v;
    v.schmidt_ranks = {numerical_rank(realign(g), tol.eps), numerical_rank(realign(g * gates::SWAP()), tol.eps)};
    v.entangling = v.schmidt_ranks[0] > 1 && v.schmidt_ranks[1] > 1;
    if (!v.entangling) {
        return v;
    }

    const double s = 0.70710678118654752440;
    const std::array<std::array<Complex, 2>, 4> probes{{{1, 0}, {0, 1}, {s, s}, {s, -s}}};
    for (const auto &x : probes) {
        for (const auto &y : probes) {
            double det = det_of_image(g, x, y);
            if (det > tol.eps) {
                v.witness = ProductWitness{x, y, det};
                return v;
            }
        }
    }
    Rng rng(seed);
    for (int attempt = 0; attempt < 1000; attempt++) {
        auto x = rng.qubit_state();
        auto y = rng.qubit_state();
        double det = det_of_image(g, x, y);
        if (det > tol.eps) {
            v.witness = ProductWitness{x, y, det};
            return v;
        }
    }
    return v;
}

std::string to_string(CnotCount c) {
    switch (c) {
        case CnotCount::Zero:
            return "0";
        case CnotCount::One:
            return "1";
        case CnotCount::Two:
            return "2";
        case CnotCount::More:
            return "more";
    }
    return "?";
}

CnotClass cnot_count_class(const ComplexMatrix &u, Tolerance tol) {
    require_unitary_two_qubit(u, "cnot_count_class");
    Complex root = std::pow(determinant(u), 0.25);
    auto su = (1.0 / root) * u;
    auto e = gates::E();
    auto g = su * e * transpose(su) * e;
    auto id = ComplexMatrix::identity(4);

    CnotClass out;
    out.gamma_trace = trace(g);
    out.gamma_sq_residual = max_abs_diff(g * g, -1.0 * id);
    if (max_abs_diff(g, id) <= tol.eps || max_abs_diff(g, -1.0 * id) <= tol.eps) {
        out.count = CnotCount::Zero;
    } else if (std::abs(out.gamma_trace) <= tol.eps && out.gamma_sq_residual <= tol.eps) {
        out.count = CnotCount::One;
    } else if (std::abs(out.gamma_trace.imag()) <= tol.eps) {
        out.count = CnotCount::Two;
    } else {
        out.count = CnotCount::More;
    }
    return out;
}

}  // namespace braidgate
