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

#ifndef BRAIDGATE_PROCESSES_H
#define BRAIDGATE_PROCESSES_H

#include <cstdint>
#include <optional>
#include <string>

#include "braidgate/complex_matrix.h"
#include "braidgate/state_vector.h"

namespace braidgate {

inline constexpr size_t kMaxDeltaQubits = 10;
inline constexpr size_t kMaxTraceQubits = 8;
inline constexpr size_t kMaxMeasureQubits = 4;
inline constexpr size_t kMaxTeleportQubits = 3;

/// sum_alpha |alpha, alpha> on 2n qubits, unnormalized (<delta|delta> = 2^n).
StateVector make_delta(size_t n);
StateVector make_delta_normalized(size_t n);

/// <delta| (U x I) |delta>, contracted on the 2n-qubit register. Throws
/// std::logic_error if it disagrees with trace(u) beyond 1e-12.
Complex trace_amplitude(const ComplexMatrix &u);

struct TraceSample {
    /// |<d|(U x I)|d>|^2 with d normalized, i.e. |tr U|^2 / 4^n.
    double exact_p;
    double estimate;
    /// Binomial standard error of the estimate.
    double std_error;
    uint64_t shots;
    uint64_t seed;
    double abs_trace_exact;
    /// 2^n sqrt(estimate)
    double abs_trace_estimate;
};

/// Samples the success outcome of projecting (U x I)|d> onto |d>.
TraceSample sample_trace_probability(const ComplexMatrix &u, uint64_t shots, uint64_t seed);

struct MeasureResult {
    /// M^T psi, unnormalized.
    StateVector out;
    /// Probability of the outcome <M| on |psi>|delta>.
    double prob;
    /// max |closed form - contraction|
    double oracle_residual;
};

/// Measures the first two n-qubit factors of |psi>|delta> against
/// <M| = sum M_ab <a|<b|. The remaining factor is M^T psi; it is computed both
/// in closed form and by contracting the full 3n-qubit state, and the two must
/// agree to 1e-12.
MeasureResult measure_apply(const ComplexMatrix &m, const StateVector &psi);

struct BasisOrthogonality {
    bool orthogonal;
    /// Gram matrix of the vectors of M, XM, YM, ZM.
    ComplexMatrix gram;
};

/// Orthogonality of the four functionals built from a 2x2 M, relative to the
/// largest Gram diagonal entry.
BasisOrthogonality basis_orthogonality(const ComplexMatrix &m, Tolerance tol = Tolerance::exact());

/// T_{a,b} for n-bit strings a, b (bit 1 of each is the most significant):
/// the tensor product of T_00 = I, T_01 = X, T_10 = Y, T_11 = Z.
ComplexMatrix teleport_operator(size_t n, size_t alpha, size_t beta);

struct TeleportResult {
    StateVector received;
    /// 2n characters: the alpha bits then the beta bits.
    std::string classical_bits;
    size_t alpha;
    size_t beta;
    double outcome_prob;
    /// Sum of all 4^n outcome probabilities.
    double total_prob;
    PhaseFit fidelity;
};

/// Teleports U psi through the functionals <T_{a,b} U^T|: outcome (a, b)
/// leaves U T_{a,b}^T psi, which the correction U (T_{a,b}^T)^-1 U^dagger maps
/// to U psi. Throws std::logic_error if the result differs from U psi up to
/// phase beyond 1e-9.
TeleportResult teleport_protocol(const ComplexMatrix &u, const StateVector &psi, uint64_t seed);

struct ProjectResult {
    /// Normalized post-measurement state of the other qubits; empty when the
    /// branch has probability zero.
    std::optional<StateVector> residual;
    double prob;
    /// Set for 3-qubit inputs with a residual.
    std::optional<bool> entangled;
};

/// Projects qubit k (1-based) of psi onto |bit>.
ProjectResult project_qubit(const StateVector &psi, size_t k, int bit);

}  // namespace braidgate

#endif
