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

#ifndef BRAIDGATE_TEMPERLEY_LIEB_H
#define BRAIDGATE_TEMPERLEY_LIEB_H

#include <optional>
#include <utility>
#include <vector>

#include "braidgate/braid_word.h"
#include "braidgate/complex_matrix.h"

namespace braidgate {

/// Bracket variable A (unit modulus) and loop value d = -A^2 - A^-2.
struct BracketParams {
    Complex A;
    Complex d;
    /// Set when built from an angle, A = exp(i theta).
    std::optional<double> theta;

    static BracketParams from_A(Complex A);
    static BracketParams from_theta(double theta);
};

/// Phi(s_i) = A I + A^-1 U_i for i in {1, 2}. Throws std::domain_error when d
/// is zero (U2 is undefined there).
ComplexMatrix tl_generator(int i, const BracketParams &p);

/// Phi(b) for a 3-strand braid, first letter acting first. Inverse letters use
/// the matrix inverse.
ComplexMatrix tl_rep3(const BraidWord &b, const BracketParams &p);

/// True when both Phi(s_1) and Phi(s_2) exist and are unitary.
bool tl_unitary(const BracketParams &p, Tolerance tol = Tolerance::exact());

/// tr Phi(b) + A^writhe (d^2 - 2).
Complex bracket3(const BraidWord &b, const BracketParams &p);

/// Residuals of the algebra relations for the 2x2 U1, U2.
struct TlRelations {
    double u1u2u1_minus_u1;
    double u2u1u2_minus_u2;
    double u2u1u2_minus_u1;
    double u1sq_minus_d_u1;
    double u2sq_minus_d_u2;
    double u2sq_minus_d_u1;
    Complex tr_u1u2;
    Complex tr_u2u1;
};

TlRelations tl_relations(Complex d);

/// An element of the planar diagram monoid on n strands: a perfect
/// non-crossing matching of the n top points (0..n-1) and the n bottom points
/// (n..2n-1).
class TLDiagram {
   public:
    static TLDiagram identity(int n);
    /// Cup-cap joining strands i and i+1 (1-based i).
    static TLDiagram e(int i, int n);

    int n() const { return n_; }
    const std::vector<int> &partner() const { return partner_; }

    /// Stacks `upper` on `lower`; returns the diagram and the closed loops formed.
    static std::pair<TLDiagram, int> compose(const TLDiagram &upper, const TLDiagram &lower);

    /// Number of loops in the closure (bottom point i joined to top point i).
    int closure_loops() const;

    bool operator==(const TLDiagram &) const = default;

   private:
    TLDiagram(int n, std::vector<int> partner) : n_(n), partner_(std::move(partner)) {}

    int n_;
    std::vector<int> partner_;
};

inline constexpr size_t kMaxOracleLetters = 16;

/// Bracket polynomial of the closure by full state enumeration. A positive
/// letter smooths to the identity with weight A or to e_i with weight A^-1;
/// negative letters swap the weights. Each state contributes
/// weight * d^(loops - 1), so the trivial 3-braid evaluates to d^2.
Complex bracket_oracle(const BraidWord &b, const BracketParams &p);

}  // namespace braidgate

#endif
