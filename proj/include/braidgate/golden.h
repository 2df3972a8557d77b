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

#ifndef BRAIDGATE_GOLDEN_H
#define BRAIDGATE_GOLDEN_H

#include <string>
#include <vector>

#include "braidgate/complex_matrix.h"
#include "braidgate/exact_matrix.h"
#include "json.hpp"

namespace braidgate {

struct GoldenCheck {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass;
};

/// The braiding gate the suite runs against, as a float matrix and as its
/// sqrt(2)-scaled integer form. Defaults to the catalog R.
struct GoldenConfig {
    ComplexMatrix r;
    ScaledGenerator r_scaled;

    static GoldenConfig standard();
};

/// Every reference value of the toolkit, recomputed. Never throws: a check
/// whose computation raises is reported as failed with the error text.
std::vector<GoldenCheck> run_golden(const GoldenConfig &config = GoldenConfig::standard());

nlohmann::json golden_to_json(const std::vector<GoldenCheck> &checks);

}  // namespace braidgate

#endif
