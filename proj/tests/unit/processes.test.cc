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

#include <cmath>
#include <numbers>
#include <set>

#include "braidgate/gates.h"
#include "braidgate/processes.h"
#include "braidgate/rng.h"
#include "doctest.h"
#include "test_helpers.h"

using namespace braidgate;

namespace {

StateVector random_state(Rng &rng, size_t n) {
    return StateVector(random_amplitudes(size_t{1} << n, rng));
}

/// <M| contracted against |psi>|delta> with delta written out index by index.
std::vector<Complex> contraction_oracle(const ComplexMatrix &m, const StateVector &psi) {
    size_t dim = psi.dim();
    std::vector<Complex> out(dim, 0.0);
    for (size_t g = 0; g < dim; ++g) {
        for (size_t a = 0; a < dim; ++a) {
            for (size_t b = 0; b < dim; ++b) {
                Complex delta_bg = b == g ? 1.0 : 0.0;
                out[g] += m(a, b) * psi[a] * delta_bg;
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("state vectors") {
    CHECK_THROWS_AS(StateVector(std::vector<Complex>(3)), DimensionError);
    CHECK_THROWS_AS(StateVector(std::vector<Complex>(1)), DimensionError);
    auto b = StateVector::basis(2, 3);
    CHECK(b[3] == Complex(1));
    CHECK(b.n_qubits() == 2);
    CHECK(b.is_normalized());
    CHECK_THROWS_AS(StateVector(std::vector<Complex>(4, 0.0)).normalized(), std::domain_error);

    Rng rng(1);
    auto psi = random_state(rng, 3);
    auto g = random_unitary(4, rng);
    auto placed = apply(kron(ComplexMatrix::identity(2), g), psi);
    auto local = apply_on(g, 2, psi);
    for (size_t i = 0; i < psi.dim(); ++i) {
        CHECK(std::abs(placed[i] - local[i]) <= 1e-12);
    }
    CHECK(states_equal_up_to_phase(apply(std::polar(1.0, 2.0) * ComplexMatrix::identity(8), psi), psi).equal);
}

TEST_CASE("delta state") {
    auto d1 = make_delta(1);
    CHECK(d1.dim() == 4);
    CHECK(d1[0] == Complex(1));
    CHECK(d1[1] == Complex(0));
    CHECK(d1[2] == Complex(0));
    CHECK(d1[3] == Complex(1));

    auto d2 = make_delta(2);
    for (size_t i = 0; i < 16; ++i) {
        bool on = i == 0b0000 || i == 0b0101 || i == 0b1010 || i == 0b1111;
        CHECK(d2[i] == Complex(on ? 1.0 : 0.0));
    }
    CHECK(std::abs(inner(make_delta(3), make_delta(3)) - 8.0) == 0.0);
    CHECK(make_delta_normalized(3).is_normalized());
    CHECK_THROWS_AS(make_delta(11), GuardError);
    CHECK_THROWS_AS(make_delta(0), DimensionError);
}

TEST_CASE("trace amplitude") {
    CHECK(std::abs(trace_amplitude(ComplexMatrix::identity(4)) - 4.0) <= 1e-12);
    CHECK(std::abs(trace_amplitude(gates::R()) - 2 * std::numbers::sqrt2) <= 1e-12);
    Rng rng(64);
    for (size_t dim : {2, 4, 8, 16, 32, 64}) {
        auto u = random_unitary(dim, rng);
        CHECK(std::abs(trace_amplitude(u) - trace(u)) <= 1e-12);
    }
    CHECK_THROWS_AS(trace_amplitude(ComplexMatrix::identity(512)), GuardError);
}

TEST_CASE("sampled trace estimation") {
    auto id = sample_trace_probability(ComplexMatrix::identity(4), 1000, 3);
    CHECK(id.exact_p == doctest::Approx(1.0));
    CHECK(id.estimate == 1.0);

    auto z = sample_trace_probability(gates::Z_tele(), 1000, 3);
    CHECK(z.exact_p == 0.0);
    CHECK(z.estimate == 0.0);

    auto r = sample_trace_probability(gates::R(), 100000, 7);
    CHECK(r.exact_p == doctest::Approx(0.5));
    CHECK(std::abs(r.estimate - r.exact_p) <= 3 * r.std_error);
    CHECK(r.abs_trace_exact == doctest::Approx(2 * std::numbers::sqrt2));

    auto again = sample_trace_probability(gates::R(), 100000, 7);
    CHECK(again.estimate == r.estimate);
    auto other = sample_trace_probability(gates::R(), 100000, 8);
    CHECK(other.estimate != r.estimate);

    CHECK_THROWS_AS(sample_trace_probability(gates::U1(2.0), 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(sample_trace_probability(gates::R(), 0, 1), std::invalid_argument);
}

TEST_CASE("measurement functionals") {
    Rng rng(5);
    auto psi = random_state(rng, 2);
    auto id = measure_apply(ComplexMatrix::identity(4), psi);
    for (size_t i = 0; i < 4; ++i) {
        CHECK(std::abs(id.out[i] - psi[i]) <= 1e-12);
    }
    CHECK(id.prob == doctest::Approx(1.0 / 16));
    CHECK(measure_apply(ComplexMatrix::identity(2), StateVector::basis(1, 0)).prob == doctest::Approx(0.25));

    auto x0 = measure_apply(gates::X_tele(), StateVector::basis(1, 0));
    CHECK(x0.out[0] == Complex(1));
    CHECK(x0.out[1] == Complex(0));

    for (size_t n : {1, 2, 3}) {
        auto m = random_matrix(size_t{1} << n, rng);
        auto s = random_state(rng, n);
        auto res = measure_apply(m, s);
        auto oracle = contraction_oracle(m, s);
        for (size_t i = 0; i < s.dim(); ++i) {
            CHECK(std::abs(res.out[i] - oracle[i]) <= 1e-12);
        }
        CHECK(res.oracle_residual <= 1e-12);
    }
    CHECK_THROWS_AS(measure_apply(ComplexMatrix::identity(2), psi), DimensionError);
    CHECK_THROWS_AS(measure_apply(ComplexMatrix(4), psi), std::invalid_argument);
}

TEST_CASE("teleportation basis") {
    CHECK(basis_orthogonality(gates::I2()).orthogonal);
    Complex z = 0.6;
    Complex w{0, 0.8};
    CHECK(basis_orthogonality(ComplexMatrix{{z, w}, {-std::conj(w), std::conj(z)}}).orthogonal);
    auto diag = basis_orthogonality(ComplexMatrix{{1, 0}, {0, 2}});
    CHECK_FALSE(diag.orthogonal);
    CHECK(std::abs(diag.gram(0, 1)) > 0.1);

    Rng rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        auto u = Complex(0.5 + rng.uniform() * 3, rng.normal()) * random_unitary(2, rng);
        CHECK(basis_orthogonality(u).orthogonal);
        CHECK_FALSE(basis_orthogonality(random_matrix(2, rng)).orthogonal);
    }
    CHECK_FALSE(basis_orthogonality(ComplexMatrix(2)).orthogonal);
    CHECK_THROWS_AS(basis_orthogonality(ComplexMatrix::identity(4)), DimensionError);
}

TEST_CASE("teleport operators") {
    CHECK(teleport_operator(1, 0, 0) == gates::I2());
    CHECK(teleport_operator(1, 0, 1) == gates::X_tele());
    CHECK(teleport_operator(1, 1, 0) == gates::Y_tele());
    CHECK(teleport_operator(1, 1, 1) == gates::Z_tele());
    CHECK(teleport_operator(2, 0b10, 0b01) == kron(gates::Y_tele(), gates::X_tele()));
}

TEST_CASE("teleportation protocol") {
    auto zero = teleport_protocol(gates::I2(), StateVector::basis(1, 0), 0);
    CHECK(std::abs(std::abs(zero.received[0]) - 1.0) <= 1e-9);

    Rng rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        size_t n = 1 + trial % 2;
        auto u = random_unitary(size_t{1} << n, rng);
        auto psi = random_state(rng, n);
        auto res = teleport_protocol(u, psi, rng.next_u64());
        CHECK(res.fidelity.equal);
        CHECK(res.fidelity.residual <= 1e-9);
        CHECK(std::abs(res.total_prob - 1.0) <= 1e-12);
        CHECK(res.classical_bits.size() == 2 * n);
        CHECK(res.outcome_prob == doctest::Approx(1.0 / static_cast<double>(1 << (2 * n))));
    }

    auto psi = random_state(rng, 2);
    auto cn = teleport_protocol(gates::CNOT(), psi, 5);
    CHECK(states_equal_up_to_phase(cn.received, apply(gates::CNOT(), psi)).equal);
    CHECK(cn.classical_bits.size() == 4);

    auto h = teleport_protocol(gates::H(), random_state(rng, 1), 3);
    CHECK(h.fidelity.equal);

    // Every seed reaches some outcome; together they cover the basis.
    std::set<std::string> seen;
    for (uint64_t seed = 0; seed < 200; ++seed) {
        seen.insert(teleport_protocol(gates::H(), StateVector::basis(1, 1), seed).classical_bits);
    }
    CHECK(seen.size() == 4);

    CHECK_THROWS_AS(teleport_protocol(ComplexMatrix::identity(16), random_state(rng, 4), 1), GuardError);
    CHECK_THROWS_AS(teleport_protocol(gates::U1(2.0), StateVector::basis(1, 0), 1), std::invalid_argument);
    CHECK_THROWS_AS(teleport_protocol(gates::H(), StateVector(std::vector<Complex>{1, 1}), 1),
                    std::invalid_argument);
}

TEST_CASE("single-qubit projections") {
    auto a0 = project_qubit(aravind_state(), 1, 0);
    CHECK(a0.prob == doctest::Approx(0.5));
    REQUIRE(a0.entangled.has_value());
    CHECK_FALSE(*a0.entangled);
    auto a1 = project_qubit(aravind_state(), 1, 1);
    CHECK(a1.prob == doctest::Approx(0.5));
    REQUIRE(a1.entangled.has_value());
    CHECK(*a1.entangled);

    for (size_t k = 1; k <= 3; ++k) {
        for (int bit : {0, 1}) {
            auto r = project_qubit(ghz_state(3), k, bit);
            CHECK(r.prob == doctest::Approx(0.5));
            REQUIRE(r.entangled.has_value());
            CHECK_FALSE(*r.entangled);
        }
    }

    Rng rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        size_t n = 2 + trial % 3;
        auto psi = random_state(rng, n);
        size_t k = 1 + rng.below(n);
        double total = project_qubit(psi, k, 0).prob + project_qubit(psi, k, 1).prob;
        CHECK(std::abs(total - 1.0) <= 1e-12);
        CHECK(project_qubit(psi, k, 0).entangled.has_value() == (n == 3));
    }

    auto none = project_qubit(StateVector::basis(2, 0), 1, 1);
    CHECK(none.prob == 0.0);
    CHECK_FALSE(none.residual.has_value());

    CHECK_THROWS_AS(project_qubit(StateVector::basis(1, 0), 1, 0), DimensionError);
    CHECK_THROWS_AS(project_qubit(aravind_state(), 4, 0), std::out_of_range);
    CHECK_THROWS_AS(project_qubit(aravind_state(), 1, 2), std::invalid_argument);
}
