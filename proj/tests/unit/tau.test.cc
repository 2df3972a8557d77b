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

#include "braidgate/braid_rep.h"
#include "braidgate/gates.h"
#include "braidgate/rng.h"
#include "braidgate/tau.h"
#include "doctest.h"
#include "test_helpers.h"

using namespace braidgate;
using braidgate::testing::random_word;

namespace {

TauValue tau_of(const std::string &word) {
    return tau(parse_braid(word)).value;
}

BraidWord power_of_s(int k) {
    return BraidWord(2, std::vector<int>(static_cast<size_t>(k), 1));
}

}  // namespace

TEST_CASE("canonical form") {
    CHECK(TauValue::from_scaled_trace(0, 5) == TauValue{0, 0});
    CHECK(TauValue::from_scaled_trace(8, 0) == TauValue{1, 6});
    CHECK(TauValue::from_scaled_trace(-4, 1) == TauValue{-1, 3});
    CHECK(TauValue::from_scaled_trace(12, 2) == TauValue{3, 2});
    CHECK(TauValue{-1, 3}.to_string() == "-2*sqrt(2)");
    CHECK(TauValue{1, 6}.to_string() == "8");
    CHECK(TauValue{0, 0}.to_string() == "0");
    CHECK(TauValue{1, 1}.to_string() == "sqrt(2)");
    CHECK(TauValue{-1, 5}.to_double() == doctest::Approx(-4 * std::numbers::sqrt2));
    CHECK(TauValue{3, -1}.to_string() == "3*sqrt(2)^-1");
}

TEST_CASE("named links") {
    CHECK(tau_of("n=3;") == TauValue{1, 6});
    CHECK(tau_of("n=2; 1 1") == TauValue{0, 0});
    CHECK(tau_of("n=2; 1 1 1") == TauValue{-1, 3});
    CHECK(tau_of("1 -2 1 -2") == TauValue{-1, 4});
    CHECK(tau_of("1 -2 1 -2 1 -2") == TauValue{-1, 6});
    CHECK(tau_of("1 1 -2 1 -2") == TauValue{-1, 5});
    CHECK(tau(parse_braid("1 1 -2 1 -2")).value_float == doctest::Approx(-4 * std::numbers::sqrt2));
}

TEST_CASE("powers of the single generator") {
    const TauValue table[8] = {{1, 4}, {1, 3}, {0, 0}, {-1, 3}, {-1, 4}, {-1, 3}, {0, 0}, {1, 3}};
    for (int k = 0; k < 8; ++k) {
        CHECK(tau(power_of_s(k)).value == table[k]);
    }
    for (int k = 0; k <= 8; ++k) {
        CHECK(tau(power_of_s(k + 8)).value == tau(power_of_s(k)).value);
    }
    // Recurrence from the skein relation.
    double prev = table[0].to_double();
    double cur = table[1].to_double();
    for (int k = 1; k < 12; ++k) {
        double next = std::numbers::sqrt2 * cur - prev;
        CHECK(next == doctest::Approx(tau(power_of_s(k + 1)).value_float).epsilon(1e-12));
        prev = cur;
        cur = next;
    }
}

TEST_CASE("float value agrees with the dense trace") {
    Rng rng(14);
    for (int trial = 0; trial < 40; ++trial) {
        auto b = random_word(rng, 2 + trial % 3, 0, 9);
        Complex dense = trace(rep_matrix(b, gates::R()));
        CHECK(std::abs(dense - tau(b).value_float) <= 1e-10);
        CHECK(std::abs(dense.imag()) <= 1e-12);
    }
}

TEST_CASE("Markov moves") {
    Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng.below(3));
        auto b = random_word(rng, n, 0, 6);
        auto g = random_word(rng, n, 0, 6);
        CHECK(tau(markov_conjugate(b, g)).value == tau(b).value);
        auto base = tau(b).value;
        for (int sign : {1, -1}) {
            auto stab = tau(markov_stabilize(b, sign)).value;
            CHECK(stab == base.times_sqrt2());
            CHECK(tau_equivalent(stab, base));
        }
    }
}

TEST_CASE("skein relation at every site") {
    Rng rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        auto b = random_word(rng, 2 + trial % 3, 1, 8);
        for (size_t site = 0; site < b.length(); ++site) {
            auto r = skein_check(b, site);
            CHECK(r.holds);
            CHECK(r.b_flipped.letters()[site] == -b.letters()[site]);
            CHECK(r.b_deleted.length() + 1 == b.length());
            CHECK(r.tau_b.to_double() + r.tau_flipped.to_double() ==
                  doctest::Approx(std::numbers::sqrt2 * r.tau_deleted.to_double()));
        }
    }
    auto hopf = skein_check(parse_braid("n=2; 1 1"), 0);
    CHECK(hopf.tau_b == TauValue{0, 0});
    CHECK(hopf.tau_flipped == TauValue{1, 4});
    CHECK(hopf.tau_deleted == TauValue{1, 3});
    CHECK_THROWS_AS(skein_check(parse_braid("n=2; 1"), 1), std::out_of_range);
}

TEST_CASE("Whitehead reduction") {
    // Deleting the first s2^-1 leaves a stabilized trefoil.
    auto w = parse_braid("1 1 -2 1 -2");
    auto r = skein_check(w, 2);
    CHECK(r.holds);
    CHECK(r.tau_deleted == tau_of("n=2; 1 1 1").times_sqrt2());
    CHECK(r.tau_b == tau_of("n=2; 1 1 1").times_sqrt2().times_sqrt2());
    CHECK(r.tau_b == TauValue{-1, 5});
}

TEST_CASE("equivalence classes") {
    CHECK_FALSE(tau_equivalent(tau_of("n=2; 1 1"), tau_of("n=2; 1 1 1")));
    CHECK_FALSE(tau_equivalent(tau_of("n=2; 1 1 1"), tau_of("n=2; 1 1 1 1 1 1 1")));
    CHECK(tau_equivalent(TauValue{0, 0}, TauValue{0, 0}));
    CHECK(tau_equivalent(TauValue{-3, 1}, TauValue{-3, 8}));
}

TEST_CASE("mutated generator changes the values") {
    auto gen = scaled_R();
    gen[0] = -gen[0];
    CHECK_FALSE(tau(parse_braid("n=2; 1 1 1"), gen).value == tau_of("n=2; 1 1 1"));
}
