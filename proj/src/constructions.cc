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

#include "braidgate/constructions.h"

#include "braidgate/gates.h"

namespace braidgate {

DecompositionReport verify_qdq_cnot() {
    return verify_qdq_cnot(gates::D());
}

DecompositionReport verify_qdq_cnot(const ComplexMatrix &d) {
    using namespace gates;
    auto q = Q();
    double residual = max_abs_diff(q * d * q, CNOT());
    return {"thm0: CNOT = Q D Q", residual, 1.0, residual <= Tolerance::exact().eps};
}

ComplexMatrix r0_cnot_expression(const ComplexMatrix &middle_local) {
    return r0_cnot_expression(middle_local, gates::R0());
}

ComplexMatrix r0_cnot_expression(const ComplexMatrix &middle_local, const ComplexMatrix &braiding) {
    using namespace gates;
    return kron(lambda(), mu()) * braiding * kron(I2(), middle_local) * braiding * kron(H(), H());
}

ComplexMatrix r_cnot_expression(const ComplexMatrix &braiding) {
    using namespace gates;
    return kron(alpha(), beta()) * braiding * kron(gamma(), delta());
}

DecompositionReport verify_r0_cnot() {
    return verify_r0_cnot(gates::R0());
}

DecompositionReport verify_r0_cnot(const ComplexMatrix &r0) {
    auto fit = equal_up_to_phase(r0_cnot_expression(gates::sigma(), r0), gates::CNOT());
    return {"thm1: CNOT = (lambda x mu) R0 (I x sigma) R0 (H x H)", fit.residual, fit.phase, fit.equal};
}

DecompositionReport verify_r_cnot() {
    return verify_r_cnot(gates::R());
}

DecompositionReport verify_r_cnot(const ComplexMatrix &r) {
    auto fit = equal_up_to_phase(r_cnot_expression(r), gates::CNOT());
    return {"thm2: CNOT = (alpha x beta) R (gamma x delta)", fit.residual, fit.phase, fit.equal};
}

}  // namespace braidgate
