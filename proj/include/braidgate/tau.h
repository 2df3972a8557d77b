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

#ifndef BRAIDGATE_TAU_H
#define BRAIDGATE_TAU_H

#include <cstdint>
#include <string>

#include "braidgate/braid_word.h"
#include "braidgate/exact_matrix.h"

namespace braidgate {

/// mantissa * sqrt(2)^exp, canonical with an odd mantissa, or (0, 0).
struct TauValue {
    int64_t mantissa = 0;
    int exp = 0;

    /// Canonical value of trace * sqrt(2)^-scale_exp.
    static TauValue from_scaled_trace(int64_t trace, int scale_exp);

    double to_double() const;
    /// e.g. "8", "0", "-2*sqrt(2)", "-4*sqrt(2)".
    std::string to_string() const;
    TauValue times_sqrt2() const;

    bool operator==(const TauValue &) const = default;
};

struct TauResult {
    TauValue value;
    double value_float;
    /// Raw integer trace of the exact representation and its scale exponent.
    int64_t trace_int;
    int scale_exp;
};

/// Trace of the R representation of b, computed exactly.
TauResult tau(const BraidWord &b);
TauResult tau(const BraidWord &b, const ScaledGenerator &generator);

/// Braids with isotopic closures have values differing by a power of sqrt(2),
/// so two values are compatible iff both vanish or their odd mantissas agree.
bool tau_equivalent(const TauValue &v1, const TauValue &v2);

struct SkeinReport {
    BraidWord b;
    /// b with the crossing at the site flipped.
    BraidWord b_flipped;
    /// b with the crossing at the site deleted.
    BraidWord b_deleted;
    TauValue tau_b;
    TauValue tau_flipped;
    TauValue tau_deleted;
    /// tau(b) + tau(b_flipped) == sqrt(2) tau(b_deleted), exactly.
    bool holds;
};

/// Checks the skein identity at letter index `site` (0-based).
SkeinReport skein_check(const BraidWord &b, size_t site);

}  // namespace braidgate

#endif
