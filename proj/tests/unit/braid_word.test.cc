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

#include <algorithm>
#include <numeric>

#include "braidgate/braid_word.h"
#include "braidgate/rng.h"
#include "doctest.h"
#include "test_helpers.h"

using namespace braidgate;
using braidgate::testing::random_word;

namespace {

/// Component labels by walking the closure permutation, returned as the
/// smallest strand in each cycle.
std::vector<int> cycle_roots(const std::vector<int> &perm) {
    std::vector<int> root(perm.size(), 0);
    for (size_t s = 0; s < perm.size(); ++s) {
        if (root[s] != 0) {
            continue;
        }
        int cur = static_cast<int>(s);
        while (root[cur] == 0) {
            root[cur] = static_cast<int>(s) + 1;
            cur = perm[cur] - 1;
        }
    }
    return root;
}

/// Signed inter-component crossing count, identifying the strands at each
/// crossing from the permutation of the prefix before it.
int brute_force_crossing_sum(const BraidWord &b, int strand_a, int strand_b) {
    auto roots = cycle_roots(permutation(b));
    int total = 0;
    for (size_t k = 0; k < b.length(); ++k) {
        std::vector<int> prefix(b.letters().begin(), b.letters().begin() + static_cast<std::ptrdiff_t>(k));
        auto perm = permutation(BraidWord(b.n_strands(), prefix));
        int g = std::abs(b.letters()[k]);
        int at_left = 0;
        int at_right = 0;
        for (size_t s = 0; s < perm.size(); ++s) {
            if (perm[s] == g) {
                at_left = static_cast<int>(s) + 1;
            }
            if (perm[s] == g + 1) {
                at_right = static_cast<int>(s) + 1;
            }
        }
        int ca = roots[at_left - 1];
        int cb = roots[at_right - 1];
        if ((ca == strand_a && cb == strand_b) || (ca == strand_b && cb == strand_a)) {
            total += b.letters()[k] > 0 ? 1 : -1;
        }
    }
    return total;
}

}  // namespace

TEST_CASE("parsing braid words") {
    auto w = parse_braid("1 1 -2 1 -2");
    CHECK(w.n_strands() == 3);
    CHECK(w.letters() == std::vector<int>{1, 1, -2, 1, -2});

    auto t = parse_braid("n=2; 1 1 1");
    CHECK(t.n_strands() == 2);
    CHECK(t.length() == 3);

    CHECK(parse_braid("n=3;").empty());
    CHECK(parse_braid("n=3;").n_strands() == 3);
    CHECK(parse_braid("  n = 4 ;  -3  ").n_strands() == 4);
    CHECK(parse_braid("n=1;").n_strands() == 1);

    CHECK_THROWS_AS(parse_braid(""), ParseError);
    CHECK_THROWS_AS(parse_braid("1 x 2"), ParseError);
    CHECK_THROWS_AS(parse_braid("1 0"), ParseError);
    CHECK_THROWS_AS(parse_braid("n=2; 2"), ParseError);
    CHECK_THROWS_AS(parse_braid("n=0;"), ParseError);
    CHECK_THROWS_AS(parse_braid("n=two; 1"), ParseError);
    CHECK_THROWS_AS(parse_braid("1.5"), ParseError);
}

TEST_CASE("text form round-trips") {
    Rng rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        auto b = random_word(rng, 2 + trial % 4, 0, 9);
        CHECK(parse_braid(to_string(b)) == b);
    }
    CHECK(to_string(parse_braid("1 -2")) == "n=3; 1 -2");
}

TEST_CASE("group operations") {
    auto a = parse_braid("n=3; 1 2");
    auto b = parse_braid("n=3; -1");
    CHECK(concat(a, b).letters() == std::vector<int>{1, 2, -1});
    CHECK(inverse(a).letters() == std::vector<int>{-2, -1});
    CHECK(free_reduce(concat(a, inverse(a))).empty());
    CHECK(free_reduce(parse_braid("n=3; 1 2 -2 2 -1 1")) == parse_braid("n=3; 1 2"));
    CHECK_THROWS_AS(concat(a, parse_braid("n=4; 1")), std::invalid_argument);

    CHECK(markov_conjugate(parse_braid("n=3; 1"), parse_braid("n=3; 2")).letters() == std::vector<int>{2, 1, -2});
    auto st = markov_stabilize(parse_braid("n=2; 1"), -1);
    CHECK(st.n_strands() == 3);
    CHECK(st.letters() == std::vector<int>{1, -2});
    CHECK_THROWS_AS(markov_stabilize(a, 2), std::invalid_argument);
}

TEST_CASE("permutations compose") {
    CHECK(permutation(parse_braid("n=3;")) == std::vector<int>{1, 2, 3});
    CHECK(permutation(parse_braid("n=3; 1")) == std::vector<int>{2, 1, 3});
    CHECK(permutation(parse_braid("n=3; 1 2")) == std::vector<int>{3, 1, 2});
    Rng rng(4);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_word(rng, 4, 0, 6);
        auto b = random_word(rng, 4, 0, 6);
        auto pa = permutation(a);
        auto pb = permutation(b);
        auto pab = permutation(concat(a, b));
        for (size_t s = 0; s < pa.size(); ++s) {
            CHECK(pab[s] == pb[pa[s] - 1]);
        }
    }
}

TEST_CASE("closures of the named links") {
    auto hopf = closure_info(parse_braid("n=2; 1 1"));
    CHECK(hopf.component_count == 2);
    CHECK(hopf.writhe == 2);
    CHECK(hopf.linking_number(1, 2) == 1);

    auto white = closure_info(parse_braid("1 1 -2 1 -2"));
    CHECK(white.component_count == 2);
    CHECK(white.linking_number(1, 2) == 0);

    auto borr = closure_info(parse_braid("1 -2 1 -2 1 -2"));
    CHECK(borr.component_count == 3);
    CHECK(borr.writhe == 0);
    for (int i = 1; i <= 3; ++i) {
        for (int j = i + 1; j <= 3; ++j) {
            CHECK(borr.linking_number(i, j) == 0);
        }
    }

    CHECK(closure_info(parse_braid("n=2; 1 1 1")).component_count == 1);
    CHECK(closure_info(parse_braid("1 -2 1 -2")).component_count == 1);
    CHECK(closure_info(parse_braid("n=3;")).component_count == 3);
    CHECK(closure_info(parse_braid("n=2; -1 -1 -1 -1")).linking_number(1, 2) == -2);
}

TEST_CASE("linking numbers agree with a brute-force crossing count") {
    Rng rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        auto b = random_word(rng, 2 + static_cast<int>(rng.below(3)), 0, 10);
        auto info = closure_info(b);
        auto roots = cycle_roots(permutation(b));
        CHECK(info.writhe == writhe(b));
        std::vector<int> distinct_roots = roots;
        std::sort(distinct_roots.begin(), distinct_roots.end());
        distinct_roots.erase(std::unique(distinct_roots.begin(), distinct_roots.end()), distinct_roots.end());
        REQUIRE(static_cast<int>(distinct_roots.size()) == info.component_count);
        for (size_t i = 0; i < distinct_roots.size(); ++i) {
            for (size_t j = i + 1; j < distinct_roots.size(); ++j) {
                int ci = info.component_of_strand[distinct_roots[i] - 1];
                int cj = info.component_of_strand[distinct_roots[j] - 1];
                int brute = brute_force_crossing_sum(b, distinct_roots[i], distinct_roots[j]);
                CHECK(brute % 2 == 0);
                CHECK(info.linking(ci, cj) * 2 == doctest::Approx(brute));
                CHECK(info.linking_number(ci, cj) == brute / 2);
            }
        }
    }
}

TEST_CASE("crossings track strand identities") {
    auto xs = crossings(parse_braid("n=3; 1 2"));
    REQUIRE(xs.size() == 2);
    CHECK(xs[0].strand_left == 1);
    CHECK(xs[0].strand_right == 2);
    CHECK(xs[1].strand_left == 1);
    CHECK(xs[1].strand_right == 3);
    CHECK(xs[1].sign == 1);
}

TEST_CASE("JSON echo") {
    auto j = braid_to_json(parse_braid("n=2; 1 1"));
    CHECK(j["n"] == 2);
    CHECK(j["components"] == 2);
    CHECK(j["writhe"] == 2);
    CHECK(j["letters"] == nlohmann::json::array({1, 1}));
    CHECK(j["linking"] == nlohmann::json::parse("[[1,2,1]]"));
}
