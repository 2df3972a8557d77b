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

#ifndef BRAIDGATE_MATRIX_JSON_H
#define BRAIDGATE_MATRIX_JSON_H

#include <string>
#include <vector>

#include "braidgate/complex_matrix.h"
#include "json.hpp"

namespace braidgate {

/// { "dim": k, "entries": [[re, im], ...] } with k*k row-major entries.
nlohmann::json matrix_to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const nlohmann::json &j);
ComplexMatrix read_matrix_file(const std::string &path);

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json &j);

/// Amplitude array [[re, im], ...].
nlohmann::json amplitudes_to_json(const std::vector<Complex> &amps);
std::vector<Complex> amplitudes_from_json(const nlohmann::json &j);

}  // namespace braidgate

#endif
