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

#ifndef BRAIDGATE_BRAID_REP_H
#define BRAIDGATE_BRAID_REP_H

#include <variant>
#include <vector>

#include "braidgate/braid_word.h"
#include "braidgate/complex_matrix.h"
#include "braidgate/exact_matrix.h"
#include "json.hpp"

namespace braidgate {

/// Largest strand count for dense representations (dimension 4096).
inline constexpr int kMaxStrands = 12;

/// rep_n(b) for a 4x4 braiding matrix r: s_i acts as r on strands i, i+1.
/// The first letter acts first, so rep(b1 b2) = rep(b2) * rep(b1) as
/// operators on column states; traces do not depend on this choice.
/// Inverse letters use dagger(r) when r is unitary and inverse(r) otherwise.
ComplexMatrix rep_matrix(const BraidWord &b, const ComplexMatrix &r);

/// Exact rep_n(b) for the catalog R, at scale exponent = word length.
ExactScaledMatrix rep_exact(const BraidWord &b);

/// Exact representation for any integer generator; inverse letters use its
/// transpose, which is the inverse for sqrt(2)-scaled orthogonal matrices.
ExactScaledMatrix rep_exact(const BraidWord &b, const ScaledGenerator &generator);

struct BraidItem {
    int letter;
};

struct LocalItem {
    int strand;
    ComplexMatrix gate;
};

using CircuitItem = std::variant<BraidItem, LocalItem>;

/// A word in the extended braid group: braiding letters interleaved with
/// single-strand gates. Items act in order.
class ExtendedCircuit {
   public:
    explicit ExtendedCircuit(int n_strands, std::vector<CircuitItem> items = {});

    int n_strands() const { return n_strands_; }
    const std::vector<CircuitItem> &items() const { return items_; }

   private:
    int n_strands_;
    std::vector<CircuitItem> items_;
};

ComplexMatrix circuit_matrix(const ExtendedCircuit &c, const ComplexMatrix &r);

/// { "n": K, "items": [ {"braid": +-i} | {"local": {"strand": i, "gate": [[re,im] x4]}} ] }
nlohmann::json circuit_to_json(const ExtendedCircuit &c);
ExtendedCircuit circuit_from_json(const nlohmann::json &j);

}  // namespace braidgate

#endif
