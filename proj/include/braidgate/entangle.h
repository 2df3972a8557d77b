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

#ifndef BRAIDGATE_ENTANGLE_H
#define BRAIDGATE_ENTANGLE_H

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "braidgate/complex_matrix.h"

namespace braidgate {

/// a|00> + b|01> + c|10> + d|11> is entangled iff |ad - bc| > tol.
bool state_is_entangled(std::span<const Complex> psi, Tolerance tol = Tolerance::exact());

/// Rearranges g so that g = A x B exactly when the result has rank one:
/// out[(i, j), (k, l)] = g[(i, k), (j, l)].
ComplexMatrix realign(const ComplexMatrix &g);

struct ProductWitness {
    std::array<Complex, 2> first;
    std::array<Complex, 2> second;
    /// |ad - bc| of the image state.
    double concurrence_det;
};

struct EntanglingVerdict {
    bool entangling;
    std::optional<ProductWitness> witness;
    /// Operator-Schmidt ranks of g and g * SWAP.
    std::array<size_t, 2> schmidt_ranks;
};

/// Deterministic decision by operator-Schmidt rank: g fails to entangle iff g
/// or g * SWAP is a local product. The witness is a certificate found by
/// scanning basis and Hadamard-basis product states, then seeded random ones.
EntanglingVerdict is_entangling(const ComplexMatrix &g, Tolerance tol = Tolerance::phase(), uint64_t seed = 0);

enum class CnotCount { Zero, One, Two, More };

std::string to_string(CnotCount c);

struct CnotClass {
    CnotCount count;
    Complex gamma_trace;
    /// max |gamma^2 + I|
    double gamma_sq_residual;
};

/// Minimal CNOT count of a two-qubit unitary from gamma(U) = U E U^T E with U
/// rescaled into SU(4). The root choice flips gamma's sign, so zero CNOTs is
/// gamma = +-I.
CnotClass cnot_count_class(const ComplexMatrix &u, Tolerance tol = Tolerance::phase());

}  // namespace braidgate

#endif
