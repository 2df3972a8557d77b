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

#ifndef BRAIDGATE_CONSTRUCTIONS_H
#define BRAIDGATE_CONSTRUCTIONS_H

#include <string>

#include "braidgate/complex_matrix.h"

namespace braidgate {

/// Outcome of checking an explicit CNOT construction.
struct DecompositionReport {
    std::string name;
    double residual;
    /// Fitted global phase (exactly 1 for checks without phase freedom).
    Complex phase;
    bool holds;
};

/// Q D Q against CNOT with no phase freedom, tolerance 1e-12. The overloads
/// taking a matrix substitute it for the catalog gate.
DecompositionReport verify_qdq_cnot();
DecompositionReport verify_qdq_cnot(const ComplexMatrix &d);

/// (lambda x mu) R0 (I x sigma) R0 (H x H) against CNOT up to global phase.
DecompositionReport verify_r0_cnot();
DecompositionReport verify_r0_cnot(const ComplexMatrix &r0);

/// (alpha x beta) R (gamma x delta) against CNOT up to global phase.
DecompositionReport verify_r_cnot();
DecompositionReport verify_r_cnot(const ComplexMatrix &r);

/// The R0 construction with a caller-supplied middle local gate.
ComplexMatrix r0_cnot_expression(const ComplexMatrix &middle_local);
ComplexMatrix r0_cnot_expression(const ComplexMatrix &middle_local, const ComplexMatrix &braiding);

/// The R construction with a caller-supplied braiding gate.
ComplexMatrix r_cnot_expression(const ComplexMatrix &braiding);

}  // namespace braidgate

#endif
