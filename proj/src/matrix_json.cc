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

#include "braidgate/matrix_json.h"

#include <fstream>
#include <stdexcept>

namespace braidgate {

nlohmann::json complex_to_json(Complex z) {
    return nlohmann::json::array({z.real(), z.imag()});
}

Complex complex_from_json(const nlohmann::json &j) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw std::invalid_argument("complex value must be [re, im], got " + j.dump());
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

nlohmann::json matrix_to_json(const ComplexMatrix &m) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto &z : m.entries()) {
        entries.push_back(complex_to_json(z));
    }
    return {{"dim", m.dim()}, {"entries", entries}};
}

ComplexMatrix matrix_from_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
        throw std::invalid_argument("matrix JSON needs \"dim\" and \"entries\"");
    }
    if (!j["dim"].is_number_integer() || j["dim"].get<int64_t>() <= 0) {
        throw std::invalid_argument("matrix \"dim\" must be a positive integer");
    }
    auto dim = j["dim"].get<size_t>();
    const auto &entries = j["entries"];
    if (!entries.is_array() || entries.size() != dim * dim) {
        throw std::invalid_argument("matrix \"entries\" must hold dim*dim = " + std::to_string(dim * dim) + " values");
    }
    std::vector<Complex> e;
    e.reserve(entries.size());
    for (const auto &z : entries) {
        e.push_back(complex_from_json(z));
    }
    ComplexMatrix m(dim, std::move(e));
    if (!all_finite(m)) {
        throw std::invalid_argument("matrix entries must be finite");
    }
    return m;
}

ComplexMatrix read_matrix_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open matrix file '" + path + "'");
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument("matrix file '" + path + "': " + e.what());
    }
    return matrix_from_json(j);
}

nlohmann::json amplitudes_to_json(const std::vector<Complex> &amps) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &z : amps) {
        out.push_back(complex_to_json(z));
    }
    return out;
}

std::vector<Complex> amplitudes_from_json(const nlohmann::json &j) {
    if (!j.is_array()) {
        throw std::invalid_argument("amplitudes must be a JSON array");
    }
    std::vector<Complex> out;
    for (const auto &z : j) {
        out.push_back(complex_from_json(z));
    }
    return out;
}

}  // namespace braidgate
