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

#include "braidgate/processes.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "braidgate/entangle.h"
#include "braidgate/gates.h"
#include "braidgate/rng.h"

namespace braidgate {

namespace {

void guard_qubits(size_t n, size_t limit, const char *what) {
    if (n < 1) {
        throw DimensionError(std::string(what) + " needs at least one qubit");
    }
    if (n > limit) {
        throw GuardError(std::string(what) + " limited to " + std::to_string(limit) + " qubits, got " +
                         std::to_string(n));
    }
}

double frobenius_sq(const ComplexMatrix &m) {
    double s = 0;
    for (const auto &x : m.entries()) {
        s += std::norm(x);
    }
    return s;
}

}  // namespace

StateVector make_delta(size_t n) {
    guard_qubits(n, kMaxDeltaQubits, "delta state");
    size_t dim = size_t{1} << n;
    std::vector<Complex> amps(dim * dim, 0.0);
    for (size_t a = 0; a < dim; ++a) {
        amps[a * dim + a] = 1.0;
    }
    return StateVector(std::move(amps));
}

StateVector make_delta_normalized(size_t n) {
    return make_delta(n).normalized();
}

Complex trace_amplitude(const ComplexMatrix &u) {
    size_t n = u.num_qubits();
    guard_qubits(n, kMaxTraceQubits, "trace amplitude");
    auto delta = make_delta(n);
    size_t dim = u.dim();
    // (U x I) acts on the first register; the second is a spectator.
    std::vector<Complex> acted(dim * dim, 0.0);
    for (size_t x = 0; x < dim; ++x) {
        for (size_t y = 0; y < dim; ++y) {
            Complex s = 0;
            for (size_t k = 0; k < dim; ++k) {
                s += u(x, k) * delta[k * dim + y];
            }
            acted[x * dim + y] = s;
        }
    }
    Complex amp = inner(delta, StateVector(std::move(acted)));
    Complex direct = trace(u);
    if (std::abs(amp - direct) > 1e-12) {
        throw std::logic_error("delta contraction disagrees with the trace");
    }
    return amp;
}

TraceSample sample_trace_probability(const ComplexMatrix &u, uint64_t shots, uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be at least 1");
    }
    if (!is_unitary(u, Tolerance::phase())) {
        throw std::invalid_argument("trace estimation needs a unitary matrix");
    }
    double scale = static_cast<double>(u.dim());
    Complex amp = trace_amplitude(u) / scale;
    double p = std::min(1.0, std::norm(amp));
    Rng rng(seed);
    uint64_t hits = 0;
    for (uint64_t s = 0; s < shots; ++s) {
        hits += rng.bernoulli(p);
    }
    double est = static_cast<double>(hits) / static_cast<double>(shots);
    double se = std::sqrt(est * (1 - est) / static_cast<double>(shots));
    return {p, est, se, shots, seed, std::abs(amp) * scale, std::sqrt(est) * scale};
}

MeasureResult measure_apply(const ComplexMatrix &m, const StateVector &psi) {
    if (m.dim() != psi.dim()) {
        throw DimensionError("functional of dim " + std::to_string(m.dim()) + " against a state of dim " +
                             std::to_string(psi.dim()));
    }
    size_t n = psi.n_qubits();
    guard_qubits(n, kMaxMeasureQubits, "measurement");
    double m_sq = frobenius_sq(m);
    double psi_sq = psi.norm_sq();
    if (m_sq == 0 || psi_sq == 0) {
        throw std::invalid_argument("measurement functional and state must be nonzero");
    }

    auto closed = apply(transpose(m), psi);

    size_t dim = psi.dim();
    auto full = tensor(psi, make_delta(n));
    std::vector<Complex> contracted(dim, 0.0);
    for (size_t a = 0; a < dim; ++a) {
        for (size_t b = 0; b < dim; ++b) {
            for (size_t g = 0; g < dim; ++g) {
                contracted[g] += m(a, b) * full[(a * dim + b) * dim + g];
            }
        }
    }
    double residual = 0;
    for (size_t g = 0; g < dim; ++g) {
        residual = std::max(residual, std::abs(contracted[g] - closed[g]));
    }
    if (residual > 1e-12 * std::max(1.0, std::sqrt(m_sq * psi_sq))) {
        throw std::logic_error("closed-form measurement disagrees with the tensor contraction");
    }
    double prob = closed.norm_sq() / (m_sq * psi_sq * static_cast<double>(dim));
    return {StateVector(std::move(contracted)), prob, residual};
}

BasisOrthogonality basis_orthogonality(const ComplexMatrix &m, Tolerance tol) {
    if (m.dim() != 2) {
        throw DimensionError("basis test needs a 2x2 matrix");
    }
    const ComplexMatrix vecs[4] = {m, gates::X_tele() * m, gates::Y_tele() * m, gates::Z_tele() * m};
    std::vector<Complex> g(16);
    double diag = 0;
    for (size_t i = 0; i < 4; ++i) {
        for (size_t j = 0; j < 4; ++j) {
            Complex s = 0;
            for (size_t k = 0; k < 4; ++k) {
                s += std::conj(vecs[i].entries()[k]) * vecs[j].entries()[k];
            }
            g[i * 4 + j] = s;
        }
        diag = std::max(diag, std::abs(g[i * 4 + i]));
    }
    bool orthogonal = diag > 0;
    for (size_t i = 0; i < 4; ++i) {
        for (size_t j = 0; j < 4; ++j) {
            if (i != j && std::abs(g[i * 4 + j]) > tol.eps * diag) {
                orthogonal = false;
            }
        }
    }
    return {orthogonal, ComplexMatrix(4, std::move(g))};
}

ComplexMatrix teleport_operator(size_t n, size_t alpha, size_t beta) {
    const ComplexMatrix singles[4] = {gates::I2(), gates::X_tele(), gates::Y_tele(), gates::Z_tele()};
    auto t = ComplexMatrix::identity(1);
    for (size_t q = 0; q < n; ++q) {
        size_t shift = n - 1 - q;
        size_t which = 2 * ((alpha >> shift) & 1) + ((beta >> shift) & 1);
        t = kron(t, singles[which]);
    }
    return t;
}

TeleportResult teleport_protocol(const ComplexMatrix &u, const StateVector &psi, uint64_t seed) {
    size_t n = u.num_qubits();
    guard_qubits(n, kMaxTeleportQubits, "teleportation");
    if (psi.dim() != u.dim()) {
        throw DimensionError("state and unitary dimensions differ");
    }
    if (!is_unitary(u, Tolerance::phase())) {
        throw std::invalid_argument("teleportation needs a unitary matrix");
    }
    if (!psi.is_normalized()) {
        throw std::invalid_argument("teleportation needs a normalized state");
    }
    size_t dim = u.dim();
    auto ut = transpose(u);
    std::vector<double> probs(dim * dim);
    double total = 0;
    for (size_t a = 0; a < dim; ++a) {
        for (size_t b = 0; b < dim; ++b) {
            probs[a * dim + b] = measure_apply(teleport_operator(n, a, b) * ut, psi).prob;
            total += probs[a * dim + b];
        }
    }

    Rng rng(seed);
    double r = rng.uniform() * total;
    size_t outcome = probs.size() - 1;
    double acc = 0;
    for (size_t k = 0; k < probs.size(); ++k) {
        acc += probs[k];
        if (r < acc) {
            outcome = k;
            break;
        }
    }
    size_t alpha = outcome / dim;
    size_t beta = outcome % dim;
    auto t = teleport_operator(n, alpha, beta);
    auto measured = measure_apply(t * ut, psi);
    auto correction = u * inverse(transpose(t)) * dagger(u);
    auto received = apply(correction, measured.out).normalized();
    auto fit = states_equal_up_to_phase(received, apply(u, psi));
    if (!fit.equal) {
        throw std::logic_error("teleported state differs from U psi");
    }

    std::string bits;
    for (size_t v : {alpha, beta}) {
        for (size_t q = 0; q < n; ++q) {
            bits.push_back(((v >> (n - 1 - q)) & 1) ? '1' : '0');
        }
    }
    return {received, bits, alpha, beta, probs[outcome], total, fit};
}

ProjectResult project_qubit(const StateVector &psi, size_t k, int bit) {
    size_t n = psi.n_qubits();
    if (n < 2) {
        throw DimensionError("projection needs at least two qubits");
    }
    if (k < 1 || k > n) {
        throw std::out_of_range("qubit " + std::to_string(k) + " out of range 1.." + std::to_string(n));
    }
    if (bit != 0 && bit != 1) {
        throw std::invalid_argument("projection bit must be 0 or 1");
    }
    double total = psi.norm_sq();
    if (total == 0) {
        throw std::invalid_argument("cannot project the zero vector");
    }
    size_t pos = n - k;
    size_t low_mask = (size_t{1} << pos) - 1;
    std::vector<Complex> rest(psi.dim() / 2);
    for (size_t i = 0; i < rest.size(); ++i) {
        size_t full = ((i & ~low_mask) << 1) | (static_cast<size_t>(bit) << pos) | (i & low_mask);
        rest[i] = psi[full];
    }
    StateVector branch(std::move(rest));
    double prob = branch.norm_sq() / total;
    if (prob == 0) {
        return {std::nullopt, 0.0, std::nullopt};
    }
    auto residual = branch.normalized();
    std::optional<bool> entangled;
    if (n == 3) {
        entangled = state_is_entangled(residual.amplitudes());
    }
    return {residual, prob, entangled};
}

}  // namespace braidgate
