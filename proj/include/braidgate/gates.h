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

#ifndef BRAIDGATE_GATES_H
#define BRAIDGATE_GATES_H

#include "braidgate/complex_matrix.h"

/// Catalog of the two-qubit braiding gates and the local factors used to build
/// CNOT from them. Every constructor reproduces a fixed printed matrix.
namespace braidgate::gates {

/// Bell-basis change matrix; a unitary solution of the braided Yang-Baxter
/// equation with R^8 = I and R + R^-1 = sqrt(2) I.
ComplexMatrix R();
ComplexMatrix R_inverse();

/// [[a,0,0,0],[0,0,b,0],[0,c,0,0],[0,0,0,d]] for unit complex a, b, c, d.
ComplexMatrix R_prime(Complex a, Complex b, Complex c, Complex d);
/// [[0,0,0,a],[0,b,0,0],[0,0,c,0],[d,0,0,0]] for unit complex a, b, c, d.
/// Solves the braided Yang-Baxter equation only when b == c.
ComplexMatrix R_dprime(Complex a, Complex b, Complex c, Complex d);
/// diag(a, b, c, d), unit entries.
ComplexMatrix P(Complex a, Complex b, Complex c, Complex d);
/// R_prime(1, 1, 1, -1).
ComplexMatrix R0();

ComplexMatrix D();
ComplexMatrix SWAP();
ComplexMatrix CNOT();
ComplexMatrix H();
ComplexMatrix I2();

/// The printed conjugator for D -> CNOT. It is block-diagonal, i.e.
/// kron(I2, H) in big-endian order.
ComplexMatrix Q();

/// Magic matrix of the Shende-Bullock-Markov CNOT-count criterion.
ComplexMatrix E();

// Modified Paulis used for teleportation. Note the naming differs from the
// conventional one: X_tele = diag(1, -1), Y_tele is the bit flip and
// Z_tele = [[0, 1], [-1, 0]].
ComplexMatrix X_tele();
ComplexMatrix Y_tele();
ComplexMatrix Z_tele();

// Local factors of CNOT = (lambda x mu) R0 (I x sigma) R0 (H x H).
ComplexMatrix sigma();
ComplexMatrix lambda();
ComplexMatrix mu();

// Local factors of CNOT = (alpha x beta) R (gamma x delta).
ComplexMatrix alpha();
ComplexMatrix beta();
ComplexMatrix gamma();
ComplexMatrix delta();

/// Temperley-Lieb generators on one qubit, symmetric and non-unitary.
/// U1 = [[d, 0], [0, 0]],
/// U2 = [[1/d, sqrt(1 - d^-2)], [sqrt(1 - d^-2), d - 1/d]] (principal root);
/// throws std::domain_error for |d| < 1e-12.
ComplexMatrix U1(Complex d);
ComplexMatrix U2(Complex d);

}  // namespace braidgate::gates

#endif
