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

#include "braidgate/temperley_lieb.h"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "braidgate/gates.h"
#include "braidgate/linking.h"

namespace braidgate {

namespace {

struct DisjointSets {
    std::vector<int> parent;

    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void join(int x, int y) { parent[find(x)] = find(y); }
};

void require_three_strands(const BraidWord &b) {
    if (b.n_strands() != 3) {
        throw std::invalid_argument("the bracket representation needs a 3-strand braid, got " +
                                    std::to_string(b.n_strands()));
    }
}

}  // namespace

BracketParams BracketParams::from_A(Complex A) {
    if (std::abs(std::abs(A) - 1.0) > 1e-12) {
        throw std::invalid_argument("bracket variable A must have unit modulus");
    }
    return {A, -A * A - 1.0 / (A * A), std::nullopt};
}

BracketParams BracketParams::from_theta(double theta) {
    auto p = from_A(std::polar(1.0, theta));
    p.theta = theta;
    return p;
}

ComplexMatrix tl_generator(int i, const BracketParams &p) {
    if (i != 1 && i != 2) {
        throw std::invalid_argument("3-strand generator index must be 1 or 2");
    }
    ComplexMatrix u = i == 1 ? gates::U1(p.d) : gates::U2(p.d);
    return p.A * ComplexMatrix::identity(2) + (1.0 / p.A) * u;
}

ComplexMatrix tl_rep3(const BraidWord &b, const BracketParams &p) {
    require_three_strands(b);
    ComplexMatrix gen[2] = {tl_generator(1, p), tl_generator(2, p)};
    ComplexMatrix inv[2] = {inverse(gen[0]), inverse(gen[1])};
    auto m = ComplexMatrix::identity(2);
    for (int g : b.letters()) {
        int k = std::abs(g) - 1;
        m = (g > 0 ? gen[k] : inv[k]) * m;
    }
    return m;
}

bool tl_unitary(const BracketParams &p, Tolerance tol) {
    if (std::abs(p.d) < tol.eps) {
        return false;
    }
    return is_unitary(tl_generator(1, p), tol) && is_unitary(tl_generator(2, p), tol);
}

Complex bracket3(const BraidWord &b, const BracketParams &p) {
    require_three_strands(b);
    return trace(tl_rep3(b, p)) + int_pow(p.A, writhe(b)) * (p.d * p.d - 2.0);
}

TlRelations tl_relations(Complex d) {
    auto u1 = gates::U1(d);
    auto u2 = gates::U2(d);
    auto u1u2 = u1 * u2;
    auto u2u1 = u2 * u1;
    auto u2u1u2 = u2u1 * u2;
    auto u2sq = u2 * u2;
    return {
        max_abs_diff(u1u2 * u1, u1),
        max_abs_diff(u2u1u2, u2),
        max_abs_diff(u2u1u2, u1),
        max_abs_diff(u1 * u1, d * u1),
        max_abs_diff(u2sq, d * u2),
        max_abs_diff(u2sq, d * u1),
        trace(u1u2),
        trace(u2u1),
    };
}

TLDiagram TLDiagram::identity(int n) {
    if (n < 1) {
        throw std::invalid_argument("diagram needs at least one strand");
    }
    std::vector<int> partner(2 * n);
    for (int i = 0; i < n; ++i) {
        partner[i] = n + i;
        partner[n + i] = i;
    }
    return {n, std::move(partner)};
}

TLDiagram TLDiagram::e(int i, int n) {
    if (i < 1 || i >= n) {
        throw std::invalid_argument("cup-cap index " + std::to_string(i) + " out of range for " + std::to_string(n) +
                                    " strands");
    }
    auto d = identity(n);
    int a = i - 1;
    int b = i;
    d.partner_[a] = b;
    d.partner_[b] = a;
    d.partner_[n + a] = n + b;
    d.partner_[n + b] = n + a;
    return d;
}

std::pair<TLDiagram, int> TLDiagram::compose(const TLDiagram &upper, const TLDiagram &lower) {
    if (upper.n_ != lower.n_) {
        throw std::invalid_argument("diagram strand counts differ");
    }
    int n = upper.n_;
    // Nodes: upper top 0..n-1, glued middle n..2n-1, lower bottom 2n..3n-1.
    // Upper point k is node k; lower point k is node n + k.
    DisjointSets sets(3 * n);
    for (int k = 0; k < 2 * n; ++k) {
        sets.join(k, upper.partner_[k]);
        sets.join(n + k, n + lower.partner_[k]);
    }
    std::vector<int> first_external(3 * n, -1);
    std::vector<int> partner(2 * n, -1);
    std::vector<bool> has_external(3 * n, false);
    auto node_to_point = [n](int node) { return node < n ? node : node - n; };
    for (int node = 0; node < 3 * n; ++node) {
        if (node >= n && node < 2 * n) {
            continue;
        }
        int root = sets.find(node);
        has_external[root] = true;
        if (first_external[root] < 0) {
            first_external[root] = node;
        } else {
            int a = node_to_point(first_external[root]);
            int b = node_to_point(node);
            partner[a] = b;
            partner[b] = a;
        }
    }
    int loops = 0;
    for (int node = n; node < 2 * n; ++node) {
        int root = sets.find(node);
        if (!has_external[root]) {
            has_external[root] = true;
            ++loops;
        }
    }
    return {TLDiagram(n, std::move(partner)), loops};
}

int TLDiagram::closure_loops() const {
    DisjointSets sets(2 * n_);
    for (int k = 0; k < 2 * n_; ++k) {
        sets.join(k, partner_[k]);
    }
    for (int i = 0; i < n_; ++i) {
        sets.join(i, n_ + i);
    }
    int loops = 0;
    for (int k = 0; k < 2 * n_; ++k) {
        loops += sets.find(k) == k;
    }
    return loops;
}

Complex bracket_oracle(const BraidWord &b, const BracketParams &p) {
    size_t len = b.length();
    if (len > kMaxOracleLetters) {
        throw GuardError("bracket oracle limited to " + std::to_string(kMaxOracleLetters) + " letters, got " +
                         std::to_string(len));
    }
    int n = b.n_strands();
    std::vector<TLDiagram> cups;
    for (int i = 1; i < n; ++i) {
        cups.push_back(TLDiagram::e(i, n));
    }
    Complex inv_a = 1.0 / p.A;
    Complex total = 0.0;
    for (uint64_t state = 0; state < (uint64_t{1} << len); ++state) {
        auto diagram = TLDiagram::identity(n);
        int loops = 0;
        Complex weight = 1.0;
        for (size_t k = 0; k < len; ++k) {
            int g = b.letters()[k];
            bool cup = (state >> k) & 1;
            bool positive = g > 0;
            weight *= (cup != positive) ? p.A : inv_a;
            if (cup) {
                auto [next, formed] = TLDiagram::compose(diagram, cups[std::abs(g) - 1]);
                diagram = std::move(next);
                loops += formed;
            }
        }
        loops += diagram.closure_loops();
        total += weight * int_pow(p.d, loops - 1);
    }
    return total;
}

}  // namespace braidgate
