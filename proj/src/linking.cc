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

#include "braidgate/linking.h"

#include <stdexcept>
#include <string>

namespace braidgate {

Complex int_pow(Complex z, int k) {
    if (k < 0) {
        return 1.0 / int_pow(z, -k);
    }
    Complex result = 1.0;
    while (k > 0) {
        if (k & 1) {
            result *= z;
        }
        z *= z;
        k >>= 1;
    }
    return result;
}

LinkingStateSum linking_state_sum(const BraidWord &b, const LinkingWeights &w) {
    if (w.a == 0.0 || w.c == 0.0) {
        throw std::invalid_argument("linking weights must be nonzero");
    }
    auto info = closure_info(b);
    if (info.component_count > kMaxLinkingComponents) {
        throw GuardError("linking state sum limited to " + std::to_string(kMaxLinkingComponents) +
                         " components, closure has " + std::to_string(info.component_count));
    }
    auto xs = crossings(b);
    std::vector<std::pair<int, int>> comps;
    comps.reserve(xs.size());
    for (const auto &x : xs) {
        comps.emplace_back(info.component_of_strand[x.strand_left - 1] - 1,
                           info.component_of_strand[x.strand_right - 1] - 1);
    }

    Complex inv_a = 1.0 / w.a;
    Complex inv_c = 1.0 / w.c;
    Complex sigma = 0.0;
    uint64_t n_labelings = uint64_t{1} << info.component_count;
    for (uint64_t labels = 0; labels < n_labelings; ++labels) {
        Complex term = 1.0;
        for (size_t k = 0; k < xs.size(); ++k) {
            bool same = ((labels >> comps[k].first) & 1) == ((labels >> comps[k].second) & 1);
            if (xs[k].sign > 0) {
                term *= same ? w.a : w.c;
            } else {
                term *= same ? inv_a : inv_c;
            }
        }
        sigma += term;
    }
    return {sigma, int_pow(w.a, -info.writhe) * sigma, info.component_count, info.writhe};
}

}  // namespace braidgate
