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

#ifndef BRAIDGATE_STATE_VECTOR_H
#define BRAIDGATE_STATE_VECTOR_H

#include <span>
#include <vector>

#include "braidgate/complex_matrix.h"

namespace braidgate {

/// Pure state of n qubits, big-endian: qubit 1 is the most significant bit of
/// the amplitude index. Not necessarily normalized.
class StateVector {
   public:
    explicit StateVector(std::vector<Complex> amplitudes);

    static StateVector basis(size_t n_qubits, size_t index);

    size_t n_qubits() const { return n_qubits_; }
    size_t dim() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    const Complex &operator[](size_t i) const { return amplitudes_[i]; }

    double norm_sq() const;
    bool is_normalized(double tol = 1e-12) const;
    /// Throws std::domain_error for the zero vector.
    StateVector normalized() const;

   private:
    size_t n_qubits_;
    std::vector<Complex> amplitudes_;
};

/// <a|b>, conjugate-linear in a.
Complex inner(const StateVector &a, const StateVector &b);

/// gate * psi on the full register; gate.dim() must equal psi.dim().
StateVector apply(const ComplexMatrix &gate, const StateVector &psi);

/// Applies `gate` (dim 2^k) to qubits first..first+k-1 (1-based).
StateVector apply_on(const ComplexMatrix &gate, size_t first_qubit, const StateVector &psi);

StateVector tensor(const StateVector &a, const StateVector &b);

/// Decides a = lambda * b for a unit lambda, fitted on the largest |b_i|.
PhaseFit states_equal_up_to_phase(const StateVector &a, const StateVector &b, Tolerance tol = Tolerance::phase());

/// (|000> + |001> + |101> + |110>) / 2
StateVector aravind_state();

/// (|0...0> + |1...1>) / sqrt(2)
StateVector ghz_state(size_t n_qubits);

}  // namespace braidgate

#endif
