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

#include "braidgate/state_vector.h"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace braidgate {

StateVector::StateVector(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    size_t len = amplitudes_.size();
    if (len < 2 || !std::has_single_bit(len)) {
        throw DimensionError("state length must be a power of two >= 2, got " + std::to_string(len));
    }
    for (const auto &a : amplitudes_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("state amplitudes must be finite");
        }
    }
    n_qubits_ = static_cast<size_t>(std::countr_zero(len));
}

StateVector StateVector::basis(size_t n_qubits, size_t index) {
    std::vector<Complex> amps(size_t{1} << n_qubits, 0.0);
    if (index >= amps.size()) {
        throw std::out_of_range("basis index out of range");
    }
    amps[index] = 1.0;
    return StateVector(std::move(amps));
}

double StateVector::norm_sq() const {
    double s = 0;
    for (const auto &a : amplitudes_) {
        s += std::norm(a);
    }
    return s;
}

bool StateVector::is_normalized(double tol) const {
    return std::abs(std::sqrt(norm_sq()) - 1.0) <= tol;
}

StateVector StateVector::normalized() const {
    double nrm = std::sqrt(norm_sq());
    if (nrm == 0) {
        throw std::domain_error("cannot normalize the zero vector");
    }
    auto amps = amplitudes_;
    for (auto &a : amps) {
        a /= nrm;
    }
    return StateVector(std::move(amps));
}

Complex inner(const StateVector &a, const StateVector &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("inner product of states with different dimensions");
    }
    Complex s = 0;
    for (size_t i = 0; i < a.dim(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

StateVector apply(const ComplexMatrix &gate, const StateVector &psi) {
    if (gate.dim() != psi.dim()) {
        throw DimensionError("matrix of dim " + std::to_string(gate.dim()) + " applied to state of dim " +
                             std::to_string(psi.dim()));
    }
    std::vector<Complex> out(psi.dim(), 0.0);
    for (size_t r = 0; r < gate.dim(); ++r) {
        Complex s = 0;
        for (size_t c = 0; c < gate.dim(); ++c) {
            s += gate(r, c) * psi[c];
        }
        out[r] = s;
    }
    return StateVector(std::move(out));
}

StateVector apply_on(const ComplexMatrix &gate, size_t first_qubit, const StateVector &psi) {
    size_t k = gate.num_qubits();
    size_t n = psi.n_qubits();
    if (first_qubit < 1 || first_qubit + k - 1 > n) {
        throw DimensionError("gate on qubits " + std::to_string(first_qubit) + ".." +
                             std::to_string(first_qubit + k - 1) + " does not fit " + std::to_string(n) + " qubits");
    }
    size_t low = n - (first_qubit + k - 1);
    size_t low_dim = size_t{1} << low;
    size_t gdim = gate.dim();
    size_t high_dim = psi.dim() / (gdim * low_dim);
    std::vector<Complex> out(psi.dim(), 0.0);
    for (size_t h = 0; h < high_dim; ++h) {
        for (size_t l = 0; l < low_dim; ++l) {
            size_t base = h * gdim * low_dim + l;
            for (size_t r = 0; r < gdim; ++r) {
                Complex s = 0;
                for (size_t c = 0; c < gdim; ++c) {
                    s += gate(r, c) * psi[base + c * low_dim];
                }
                out[base + r * low_dim] = s;
            }
        }
    }
    return StateVector(std::move(out));
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    std::vector<Complex> out;
    out.reserve(a.dim() * b.dim());
    for (size_t i = 0; i < a.dim(); ++i) {
        for (size_t j = 0; j < b.dim(); ++j) {
            out.push_back(a[i] * b[j]);
        }
    }
    return StateVector(std::move(out));
}

PhaseFit states_equal_up_to_phase(const StateVector &a, const StateVector &b, Tolerance tol) {
    if (a.dim() != b.dim()) {
        throw DimensionError("phase comparison of states with different dimensions");
    }
    size_t best = 0;
    for (size_t i = 1; i < b.dim(); ++i) {
        if (std::abs(b[i]) > std::abs(b[best])) {
            best = i;
        }
    }
    Complex phase = 1.0;
    if (std::abs(b[best]) > 0) {
        Complex ratio = a[best] / b[best];
        if (std::abs(ratio) > 0) {
            phase = ratio / std::abs(ratio);
        }
    }
    double residual = 0;
    for (size_t i = 0; i < a.dim(); ++i) {
        residual = std::max(residual, std::abs(a[i] - phase * b[i]));
    }
    return {residual <= tol.eps, phase, residual};
}

StateVector aravind_state() {
    std::vector<Complex> amps(8, 0.0);
    for (size_t i : {0b000, 0b001, 0b101, 0b110}) {
        amps[i] = 0.5;
    }
    return StateVector(std::move(amps));
}

StateVector ghz_state(size_t n_qubits) {
    std::vector<Complex> amps(size_t{1} << n_qubits, 0.0);
    amps.front() = amps.back() = 1.0 / std::sqrt(2.0);
    return StateVector(std::move(amps));
}

}  // namespace braidgate
