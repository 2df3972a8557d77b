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

#include "braidgate/linking.h"
#include "braidgate/rng.h"
#include "doctest.h"
#include "test_helpers.h"

using namespace braidgate;
using braidgate::testing::random_word;

namespace {

/// Direct enumeration for a torus link T(2, 2k) closed from s^(2k): both
/// strands are distinct components and every crossing joins them.
Complex torus_state_sum(const LinkingWeights &w, int k) {
    Complex sigma = 0;
    for (int l1 = 0; l1 < 2; ++l1) {
        for (int l2 = 0; l2 < 2; ++l2) {
            Complex term = 1;
            for (int x = 0; x < 2 * k; ++x) {
                term *= l1 == l2 ? w.a : w.c;
            }
            sigma += term;
        }
    }
    return sigma;
}

}  // namespace

TEST_CASE("integer powers") {
    Complex z{0.3, -1.2};
    CHECK(std::abs(int_pow(z, 0) - 1.0) == 0.0);
    CHECK(std::abs(int_pow(z, 5) - z * z * z * z * z) <= 1e-12);
    CHECK(std::abs(int_pow(z, -3) - 1.0 / (z * z * z)) <= 1e-12);
}

TEST_CASE("Hopf link") {
    Rng rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        LinkingWeights w{rng.unit_complex(), rng.unit_complex()};
        auto s = linking_state_sum(parse_braid("n=2; 1 1"), w);
        CHECK(std::abs(s.sigma - 2.0 * (w.a * w.a + w.c * w.c)) <= 1e-12);
        CHECK(std::abs(s.z - 2.0 * (1.0 + (w.c / w.a) * (w.c / w.a))) <= 1e-12);
        CHECK(s.components == 2);
        CHECK(s.writhe == 2);
    }
    auto zero = linking_state_sum(parse_braid("n=2; 1 1"), {1.0, kI});
    CHECK(std::abs(zero.z) <= 1e-12);
}

TEST_CASE("unlinks and torus links") {
    LinkingWeights w{std::polar(1.0, 0.7), std::polar(1.0, 2.1)};
    CHECK(std::abs(linking_state_sum(parse_braid("n=2;"), w).z - 4.0) <= 1e-12);
    CHECK(std::abs(linking_state_sum(parse_braid("n=3;"), w).z - 8.0) <= 1e-12);
    for (int k = 0; k <= 5; ++k) {
        auto s = linking_state_sum(BraidWord(2, std::vector<int>(static_cast<size_t>(2 * k), 1)), w);
        Complex formula = 2.0 * (1.0 + int_pow(w.c * w.c / (w.a * w.a), k));
        CHECK(std::abs(s.z - formula) <= 1e-12);
        CHECK(std::abs(s.sigma - torus_state_sum(w, k)) <= 1e-12);
    }
}

TEST_CASE("two-component closures follow the linking number") {
    Rng rng(31);
    int tested = 0;
    while (tested < 100) {
        auto b = random_word(rng, 2 + static_cast<int>(rng.below(3)), 0, 10);
        auto info = closure_info(b);
        if (info.component_count != 2) {
            continue;
        }
        ++tested;
        LinkingWeights w{rng.unit_complex(), rng.unit_complex()};
        auto s = linking_state_sum(b, w);
        Complex formula = 2.0 * (1.0 + int_pow(w.c * w.c / (w.a * w.a), info.linking_number(1, 2)));
        CHECK(std::abs(s.z - formula) <= 1e-12);
    }
}

TEST_CASE("non-unit weights use reciprocals") {
    LinkingWeights w{2.0, 3.0};
    auto s = linking_state_sum(parse_braid("n=2; -1 -1"), w);
    CHECK(std::abs(s.sigma - 2.0 * (0.25 + 1.0 / 9.0)) <= 1e-12);
    CHECK(std::abs(s.z - 2.0 * (1.0 + 4.0 / 9.0)) <= 1e-12);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(linking_state_sum(parse_braid("n=2; 1"), {0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(linking_state_sum(parse_braid("n=2; 1"), {1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(linking_state_sum(BraidWord::identity(21), {1.0, 1.0}), GuardError);
    CHECK_NOTHROW(linking_state_sum(BraidWord::identity(12), {1.0, 1.0}));
}
