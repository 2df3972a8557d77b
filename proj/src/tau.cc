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

#include "braidgate/tau.h"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "braidgate/braid_rep.h"

namespace braidgate {

TauValue TauValue::from_scaled_trace(int64_t trace, int scale_exp) {
    if (trace == 0) {
        return {0, 0};
    }
    int twos = std::countr_zero(static_cast<uint64_t>(std::llabs(trace)));
    return {trace / (int64_t{1} << twos), 2 * twos - scale_exp};
}

double TauValue::to_double() const {
    return static_cast<double>(mantissa) * std::pow(2.0, 0.5 * exp);
}

std::string TauValue::to_string() const {
    if (mantissa == 0) {
        return "0";
    }
    if (exp < 0) {
        return std::to_string(mantissa) + "*sqrt(2)^" + std::to_string(exp);
    }
    int64_t integral = mantissa * (int64_t{1} << (exp / 2));
    if (exp % 2 == 0) {
        return std::to_string(integral);
    }
    if (integral == 1) {
        return "sqrt(2)";
    }
    if (integral == -1) {
        return "-sqrt(2)";
    }
    return std::to_string(integral) + "*sqrt(2)";
}

TauValue TauValue::times_sqrt2() const {
    if (mantissa == 0) {
        return *this;
    }
    return {mantissa, exp + 1};
}

TauResult tau(const BraidWord &b) {
    return tau(b, scaled_R());
}

TauResult tau(const BraidWord &b, const ScaledGenerator &generator) {
    auto m = rep_exact(b, generator);
    int64_t t = m.trace_int();
    auto value = TauValue::from_scaled_trace(t, m.scale_exp());
    return {value, value.to_double(), t, m.scale_exp()};
}

bool tau_equivalent(const TauValue &v1, const TauValue &v2) {
    if (v1.mantissa == 0 || v2.mantissa == 0) {
        return v1.mantissa == 0 && v2.mantissa == 0;
    }
    return v1.mantissa == v2.mantissa;
}

SkeinReport skein_check(const BraidWord &b, size_t site) {
    if (site >= b.length()) {
        throw std::out_of_range("skein site " + std::to_string(site) + " is past the end of a word of length " +
                                std::to_string(b.length()));
    }
    auto flipped_letters = b.letters();
    flipped_letters[site] = -flipped_letters[site];
    auto deleted_letters = b.letters();
    deleted_letters.erase(deleted_letters.begin() + static_cast<std::ptrdiff_t>(site));

    SkeinReport r{b, BraidWord(b.n_strands(), std::move(flipped_letters)),
                  BraidWord(b.n_strands(), std::move(deleted_letters)), {}, {}, {}, false};
    auto t_b = tau(r.b);
    auto t_f = tau(r.b_flipped);
    auto t_d = tau(r.b_deleted);
    r.tau_b = t_b.value;
    r.tau_flipped = t_f.value;
    r.tau_deleted = t_d.value;
    // At a common scale L: T(b) + T(b') = sqrt(2) * sqrt(2) * T(b'') = 2 T(b'').
    r.holds = t_b.trace_int + t_f.trace_int == 2 * t_d.trace_int;
    return r;
}

}  // namespace braidgate
