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

#ifndef BRAIDGATE_GATE_NAMES_H
#define BRAIDGATE_GATE_NAMES_H

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "braidgate/complex_matrix.h"

namespace braidgate {

struct UnknownNameError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Resolves a catalog gate by name. Parameterized gates take a colon suffix of
/// comma-separated numbers read as re,im pairs, e.g. "Rprime:1,0,1,0,1,0,-1,0".
/// A list of exactly one real per parameter is also accepted ("Rprime:1,1,1,-1").
ComplexMatrix resolve_gate(std::string_view spec);

/// Parses "re,im" (or a bare real) into a complex number.
Complex parse_complex(std::string_view text);

struct GateEntry {
    std::string name;
    std::string description;
};

std::vector<GateEntry> gate_catalog();

}  // namespace braidgate

#endif
