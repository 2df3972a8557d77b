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

#include "braidgate/ybe.h"

#include "braidgate/gates.h"

namespace braidgate {

namespace {

void require_two_qubit(const ComplexMatrix &r) {
    if (r.dim() != 4) {
        throw DimensionError("Yang-Baxter check needs a 4x4 matrix, got dim " + std::to_string(r.dim()));
    }
}

}  // namespace

YbeReport check_ybe_braided(const ComplexMatrix &r, Tolerance tol) {
    require_two_qubit(r);
    auto r12 = place(r, 1, 3);
    auto r23 = place(r, 2, 3);
    double residual = max_abs_diff(r12 * r23 * r12, r23 * r12 * r23);
    return {residual, residual <= tol.eps};
}

YbeReport check_ybe_algebraic(const ComplexMatrix &r, Tolerance tol) {
    require_two_qubit(r);
    auto r12 = place(r, 1, 3);
    auto r23 = place(r, 2, 3);
    auto swap23 = place(gates::SWAP(), 2, 3);
    auto r13 = swap23 * r12 * swap23;
    double residual = max_abs_diff(r12 * r13 * r23, r23 * r13 * r12);
    return {residual, residual <= tol.eps};
}

}  // namespace braidgate
