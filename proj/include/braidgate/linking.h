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

#ifndef BRAIDGATE_LINKING_H
#define BRAIDGATE_LINKING_H

#include "braidgate/braid_word.h"
#include "braidgate/complex_matrix.h"

namespace braidgate {

/// Vertex weights: a where the two strands at a crossing carry the same
/// label, c where they differ.
struct LinkingWeights {
    Complex a;
    Complex c;
};

struct LinkingStateSum {
    Complex sigma;
    /// a^-writhe * sigma
    Complex z;
    int components;
    int writhe;
};

inline constexpr int kMaxLinkingComponents = 20;

/// Sums over all two-valued labelings of the closure's components. Negative
/// crossings contribute the reciprocals 1/a and 1/c.
LinkingStateSum linking_state_sum(const BraidWord &b, const LinkingWeights &w);

/// z^k for integer k (negative allowed for nonzero z), by repeated squaring.
Complex int_pow(Complex z, int k);

}  // namespace braidgate

#endif
