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

#ifndef BRAIDGATE_YBE_H
#define BRAIDGATE_YBE_H

#include "braidgate/complex_matrix.h"

namespace braidgate {

struct YbeReport {
    /// Max-entry norm of LHS - RHS on the three-qubit space.
    double residual;
    bool holds;
};

/// (R x I)(I x R)(R x I) = (I x R)(R x I)(I x R) for a 4x4 r.
YbeReport check_ybe_braided(const ComplexMatrix &r, Tolerance tol = Tolerance::exact());

/// r12 r13 r23 = r23 r13 r12, where r13 is r12 conjugated by the swap of
/// factors 2 and 3.
YbeReport check_ybe_algebraic(const ComplexMatrix &r, Tolerance tol = Tolerance::exact());

}  // namespace braidgate

#endif
