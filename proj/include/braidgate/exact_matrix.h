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

#ifndef BRAIDGATE_EXACT_MATRIX_H
#define BRAIDGATE_EXACT_MATRIX_H

#include <array>
#include <cstdint>
#include <vector>

#include "braidgate/complex_matrix.h"

namespace braidgate {

/// Square integer matrix M with a global exponent e, denoting M * sqrt(2)^-e.
///
/// Products of L generator matrices sqrt(2) R stay integral at e = L, so traces
/// and equality tests on braid representations are exact. Arithmetic is
/// overflow-checked and throws GuardError instead of wrapping.
class ExactScaledMatrix {
   public:
    ExactScaledMatrix(size_t dim, std::vector<int64_t> entries, int scale_exp);

    static ExactScaledMatrix identity(size_t dim);

    size_t dim() const { return dim_; }
    int scale_exp() const { return scale_exp_; }
    int64_t operator()(size_t row, size_t col) const { return entries_[row * dim_ + col]; }
    const std::vector<int64_t> &entries() const { return entries_; }

    /// Integer trace; the represented trace is trace_int() * sqrt(2)^-scale_exp().
    int64_t trace_int() const;

    /// Divides out factors of 2 (two units of exponent) while every entry is
    /// even and the exponent stays nonnegative.
    ExactScaledMatrix canonical() const;

    /// Same value at a larger exponent. Only even increases are representable.
    ExactScaledMatrix rescaled(int new_exp) const;

    ComplexMatrix to_complex() const;

    /// Exact value equality.
    bool operator==(const ExactScaledMatrix &other) const;

   private:
    size_t dim_;
    std::vector<int64_t> entries_;
    int scale_exp_;
};

/// Entrywise sum at the larger exponent. Throws std::invalid_argument when the
/// exponents differ in parity, since the sum then leaves the integer lattice.
ExactScaledMatrix operator+(const ExactScaledMatrix &a, const ExactScaledMatrix &b);

/// sqrt(2) * s * I expressed exactly (entries 2s at exponent 1).
ExactScaledMatrix sqrt2_times_identity(size_t dim, int64_t s = 1);

/// Row-major 4x4 integer matrix; the generator is this matrix * sqrt(2)^-1.
using ScaledGenerator = std::array<int, 16>;

/// sqrt(2) R with entries in {-1, 0, 1}.
ScaledGenerator scaled_R();

}  // namespace braidgate

#endif
