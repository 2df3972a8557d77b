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

#include "braidgate/constructions.h"
#include "braidgate/entangle.h"
#include "braidgate/gate_names.h"
#include "braidgate/gates.h"
#include "braidgate/rng.h"
#include "braidgate/ybe.h"
#include "doctest.h"
#include "test_helpers.h"

using namespace braidgate;
using namespace braidgate::gates;

namespace {

const double kSqrt2 = std::numbers::sqrt2;

std::vector<Complex> apply4(const ComplexMatrix &g, const std::vector<Complex> &v) {
    std::vector<Complex> out(4, 0.0);
    for (size_t r = 0; r < 4; ++r) {
        for (size_t c = 0; c < 4; ++c) {
            out[r] += g(r, c) * v[c];
        }
    }
    return out;
}

/// Rank one via vanishing 2x2 minors, independent of numerical_rank. A gate
/// is a local product, possibly after a swap, iff a realignment has rank one.
bool rank_one(const ComplexMatrix &m) {
    for (size_t i = 0; i < 4; ++i) {
        for (size_t j = i + 1; j < 4; ++j) {
            for (size_t k = 0; k < 4; ++k) {
                for (size_t l = k + 1; l < 4; ++l) {
                    if (std::abs(m(i, k) * m(j, l) - m(i, l) * m(j, k)) > 1e-9) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

bool near(const std::vector<Complex> &a, const std::vector<Complex> &b) {
    for (size_t k = 0; k < a.size(); ++k) {
        if (std::abs(a[k] - b[k]) > 1e-15) {
            return false;
        }
    }
    return a.size() == b.size();
}

}  // namespace

TEST_CASE("R is the unitary Bell-basis change") {
    auto r = R();
    CHECK(is_unitary(r));
    CHECK(max_abs_diff(r * dagger(r), ComplexMatrix::identity(4)) <= 1e-12);
    CHECK(max_abs_diff(power(r, 8), ComplexMatrix::identity(4)) <= 1e-12);
    CHECK(max_abs_diff(power(r, 4), ComplexMatrix::identity(4)) > 1.0);
    CHECK(max_abs_diff(r + R_inverse(), Complex(kSqrt2) * ComplexMatrix::identity(4)) <= 1e-12);
    CHECK(max_abs_diff(R_inverse(), inverse(r)) <= 1e-12);

    const double h = 1 / kSqrt2;
    CHECK(near(apply4(r, {1, 0, 0, 0}), std::vector<Complex>{h, 0, 0, -h}));
    CHECK(near(apply4(r, {0, 1, 0, 0}), std::vector<Complex>{0, h, h, 0}));
    CHECK(near(apply4(r, {0, 0, 1, 0}), std::vector<Complex>{0, -h, h, 0}));
    CHECK(near(apply4(r, {0, 0, 0, 1}), std::vector<Complex>{h, 0, 0, h}));
}

TEST_CASE("parameterized families") {
    Complex a{0, 1};
    Complex b = -1.0;
    Complex c = std::polar(1.0, 0.3);
    Complex d = std::polar(1.0, -2.0);
    auto rp = R_prime(a, b, c, d);
    CHECK(rp(0, 0) == a);
    CHECK(rp(1, 2) == b);
    CHECK(rp(2, 1) == c);
    CHECK(rp(3, 3) == d);
    auto rpp = R_dprime(a, b, c, d);
    CHECK(rpp(0, 3) == a);
    CHECK(rpp(3, 0) == d);
    CHECK(R_prime(1, 1, 1, 1) == SWAP());
    CHECK(R0() == R_prime(1, 1, 1, -1));
    CHECK(P(a, b, c, d)(2, 2) == c);
    CHECK_THROWS_AS(R_prime(2.0, 1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(P(1, 1, 1, 0.5), std::invalid_argument);
}

TEST_CASE("braided Yang-Baxter solutions") {
    CHECK(check_ybe_braided(R()).residual <= 1e-12);
    CHECK(check_ybe_braided(R_inverse()).holds);
    CHECK(check_ybe_braided(SWAP()).residual <= 1e-12);
    CHECK_FALSE(check_ybe_braided(CNOT()).holds);
    CHECK(check_ybe_braided(CNOT()).residual > 0.5);
    CHECK_THROWS_AS(check_ybe_braided(I2()), DimensionError);

    Rng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        Complex a = rng.unit_complex();
        Complex b = rng.unit_complex();
        Complex c = rng.unit_complex();
        Complex d = rng.unit_complex();
        CHECK(check_ybe_braided(R_prime(a, b, c, d)).residual <= 1e-12);
        // The anti-diagonal family solves the braided equation when b = c.
        CHECK(check_ybe_braided(R_dprime(a, b, b, d)).residual <= 1e-12);
        CHECK_FALSE(check_ybe_braided(R_dprime(a, b, c, d)).holds);
    }
}

TEST_CASE("algebraic Yang-Baxter solutions") {
    CHECK(check_ybe_algebraic(D()).residual <= 1e-12);
    CHECK(check_ybe_algebraic(SWAP() * R()).residual <= 1e-12);
    CHECK(check_ybe_algebraic(ComplexMatrix::identity(4)).holds);
    Rng rng(2);
    for (int trial = 0; trial < 10; ++trial) {
        auto p = P(rng.unit_complex(), rng.unit_complex(), rng.unit_complex(), rng.unit_complex());
        CHECK(check_ybe_algebraic(p).residual <= 1e-12);
    }
    // R itself solves the braided form, not the algebraic one.
    CHECK_FALSE(check_ybe_algebraic(R()).holds);
}

TEST_CASE("CNOT constructions") {
    auto t0 = verify_qdq_cnot();
    CHECK(t0.holds);
    CHECK(t0.residual <= 1e-12);
    auto t1 = verify_r0_cnot();
    CHECK(t1.holds);
    CHECK(t1.residual <= 1e-9);
    CHECK(std::abs(std::abs(t1.phase) - 1.0) <= 1e-12);
    auto t2 = verify_r_cnot();
    CHECK(t2.holds);
    CHECK(t2.residual <= 1e-9);

    // Negative controls: a wrong factor breaks each construction.
    CHECK_FALSE(equal_up_to_phase(r0_cnot_expression(H()), CNOT()).equal);
    CHECK_FALSE(equal_up_to_phase(r_cnot_expression(SWAP()), CNOT()).equal);
    CHECK_FALSE(verify_qdq_cnot(CNOT()).holds);
    CHECK_FALSE(verify_r_cnot(R_inverse()).holds);
}

TEST_CASE("product-state entanglement test") {
    const double h = 1 / kSqrt2;
    CHECK(state_is_entangled(std::vector<Complex>{h, 0, 0, h}));
    CHECK_FALSE(state_is_entangled(std::vector<Complex>{1, 0, 0, 0}));
    CHECK_FALSE(state_is_entangled(std::vector<Complex>{0.5, 0.5, 0.5, 0.5}));
    CHECK_THROWS_AS(state_is_entangled(std::vector<Complex>{0, 0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(state_is_entangled(std::vector<Complex>{1, 0}), DimensionError);
}

TEST_CASE("entangling gates") {
    auto vr = is_entangling(R());
    CHECK(vr.entangling);
    REQUIRE(vr.witness.has_value());
    // The witness maps to an entangled state.
    std::vector<Complex> in{vr.witness->first[0] * vr.witness->second[0], vr.witness->first[0] * vr.witness->second[1],
                            vr.witness->first[1] * vr.witness->second[0], vr.witness->first[1] * vr.witness->second[1]};
    CHECK(state_is_entangled(apply4(R(), in)));

    CHECK(is_entangling(R0()).entangling);
    CHECK(is_entangling(CNOT()).entangling);
    CHECK_FALSE(is_entangling(SWAP()).entangling);
    CHECK_FALSE(is_entangling(SWAP()).witness.has_value());
    CHECK_FALSE(is_entangling(kron(H(), Z_tele())).entangling);
    CHECK_FALSE(is_entangling(SWAP() * kron(H(), X_tele())).entangling);
    CHECK_THROWS_AS(is_entangling(ComplexMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 2}}),
                    std::invalid_argument);
}

TEST_CASE("R' and R'' entangle exactly when ad != bc") {
    Rng rng(123);
    for (int trial = 0; trial < 60; ++trial) {
        Complex a = rng.unit_complex();
        Complex b = rng.unit_complex();
        Complex c = rng.unit_complex();
        Complex d = trial % 3 == 0 ? b * c / a : rng.unit_complex();
        bool expected = std::abs(a * d - b * c) > 1e-9;
        for (const auto &g : {R_prime(a, b, c, d), R_dprime(a, b, c, d)}) {
            bool oracle = !(rank_one(realign(g)) || rank_one(realign(g * SWAP())));
            CHECK(oracle == expected);
            CHECK(is_entangling(g).entangling == expected);
        }
    }
}

TEST_CASE("CNOT-count classes") {
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        auto local = kron(random_unitary(2, rng), random_unitary(2, rng));
        CHECK(cnot_count_class(local).count == CnotCount::Zero);
        CHECK(cnot_count_class(std::polar(1.0, 0.4 * trial) * local).count == CnotCount::Zero);
    }
    CHECK(cnot_count_class(R()).count == CnotCount::One);
    CHECK(cnot_count_class(CNOT()).count == CnotCount::One);
    CHECK(cnot_count_class(R0()).count == CnotCount::Two);
    CHECK(cnot_count_class(SWAP()).count == CnotCount::More);
    CHECK(to_string(CnotCount::More) == "more");

    // Local dressing does not change the class.
    auto l1 = kron(random_unitary(2, rng), random_unitary(2, rng));
    auto l2 = kron(random_unitary(2, rng), random_unitary(2, rng));
    CHECK(cnot_count_class(l1 * R() * l2).count == CnotCount::One);
    CHECK(cnot_count_class(l1 * R0() * l2).count == CnotCount::Two);

    // R' with ad/bc = -1 needs two CNOTs; a generic phase ratio needs three.
    CHECK(cnot_count_class(R_prime(kI, 1, 1, kI)).count == CnotCount::Two);
    CHECK(cnot_count_class(R_prime(1, 1, 1, std::polar(1.0, 1.0))).count == CnotCount::More);
}

TEST_CASE("gate names") {
    CHECK(resolve_gate("R") == R());
    CHECK(resolve_gate("Rprime:1,1,1,-1") == R0());
    CHECK(resolve_gate("Rprime:1,0,1,0,1,0,-1,0") == R0());
    CHECK(resolve_gate("P:0,1,1,0,1,0,1,0")(0, 0) == kI);
    CHECK(resolve_gate("U1:2")(0, 0) == Complex(2));
    CHECK_THROWS_AS(resolve_gate("Nope"), UnknownNameError);
    CHECK_THROWS_AS(resolve_gate("R:1"), std::invalid_argument);
    CHECK_THROWS_AS(resolve_gate("Rprime:1,1"), std::invalid_argument);
    CHECK(parse_complex("1.5,-2") == Complex(1.5, -2));
    CHECK(parse_complex("3") == Complex(3, 0));
    CHECK_THROWS(parse_complex("a,b"));
    for (const auto &entry : gate_catalog()) {
        if (entry.name.find(':') == std::string::npos) {
            CHECK_NOTHROW(resolve_gate(entry.name));
        }
    }
}

TEST_CASE("Temperley-Lieb generators") {
    Complex d = 1.3;
    CHECK(std::abs(trace(U1(d)) - d) <= 1e-12);
    CHECK(std::abs(trace(U2(d)) - d) <= 1e-12);
    CHECK(max_abs_diff(U2(d), transpose(U2(d))) == 0.0);
    CHECK_FALSE(is_unitary(U1(d)));
    CHECK_THROWS_AS(U2(0.0), std::domain_error);
}
