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

#include "braidgate/gate_names.h"

#include <charconv>
#include <functional>
#include <map>

#include "braidgate/gates.h"

namespace braidgate {

namespace {

double parse_double(std::string_view token) {
    std::string s(token);
    size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        throw std::invalid_argument("malformed number '" + s + "'");
    }
    if (used != s.size()) {
        throw std::invalid_argument("malformed number '" + s + "'");
    }
    return v;
}

std::vector<double> parse_numbers(std::string_view text) {
    std::vector<double> out;
    while (true) {
        auto comma = text.find(',');
        out.push_back(parse_double(text.substr(0, comma)));
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    return out;
}

std::vector<Complex> parse_params(std::string_view name, std::string_view text, size_t count) {
    if (text.empty()) {
        throw std::invalid_argument("gate '" + std::string(name) + "' needs " + std::to_string(count) +
                                    " complex parameters");
    }
    auto nums = parse_numbers(text);
    std::vector<Complex> out;
    if (nums.size() == 2 * count) {
        for (size_t k = 0; k < count; k++) {
            out.emplace_back(nums[2 * k], nums[2 * k + 1]);
        }
    } else if (nums.size() == count) {
        for (double x : nums) {
            out.emplace_back(x, 0.0);
        }
    } else {
        throw std::invalid_argument("gate '" + std::string(name) + "' needs " + std::to_string(count) +
                                    " complex parameters as re,im pairs");
    }
    return out;
}

using Fixed = std::function<ComplexMatrix()>;

const std::map<std::string, std::pair<Fixed, std::string>, std::less<>> &fixed_gates() {
    static const std::map<std::string, std::pair<Fixed, std::string>, std::less<>> table = {
        {"R", {gates::R, "Bell-basis change, braided Yang-Baxter solution"}},
        {"Rinv", {gates::R_inverse, "inverse of R (its transpose)"}},
        {"R0", {gates::R0, "Rprime:1,1,1,-1"}},
        {"D", {gates::D, "phase gate diag(1,1,1,-1)"}},
        {"SWAP", {gates::SWAP, "swap gate"}},
        {"CNOT", {gates::CNOT, "controlled NOT, control on qubit 1"}},
        {"E", {gates::E, "magic matrix of the CNOT-count criterion"}},
        {"Q", {gates::Q, "conjugator with Q D Q = CNOT"}},
        {"H", {gates::H, "Hadamard"}},
        {"I", {gates::I2, "2x2 identity"}},
        {"X", {gates::X_tele, "modified Pauli diag(1,-1)"}},
        {"Y", {gates::Y_tele, "modified Pauli [[0,1],[1,0]]"}},
        {"Z", {gates::Z_tele, "modified Pauli [[0,1],[-1,0]]"}},
        {"sigma", {gates::sigma, "local factor for CNOT from R0"}},
        {"lambda", {gates::lambda, "local factor for CNOT from R0"}},
        {"mu", {gates::mu, "local factor for CNOT from R0"}},
        {"alpha", {gates::alpha, "local factor for CNOT from R"}},
        {"beta", {gates::beta, "local factor for CNOT from R"}},
        {"gamma", {gates::gamma, "local factor for CNOT from R"}},
        {"delta", {gates::delta, "local factor for CNOT from R"}},
    };
    return table;
}

}  // namespace

Complex parse_complex(std::string_view text) {
    auto nums = parse_numbers(text);
    if (nums.size() == 1) {
        return {nums[0], 0.0};
    }
    if (nums.size() == 2) {
        return {nums[0], nums[1]};
    }
    throw std::invalid_argument("complex value must be 're,im', got '" + std::string(text) + "'");
}

ComplexMatrix resolve_gate(std::string_view spec) {
    auto colon = spec.find(':');
    std::string_view name = spec.substr(0, colon);
    std::string_view params = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

    if (auto it = fixed_gates().find(name); it != fixed_gates().end()) {
        if (!params.empty()) {
            throw std::invalid_argument("gate '" + std::string(name) + "' takes no parameters");
        }
        return it->second.first();
    }
    if (name == "Rprime" || name == "Rdprime" || name == "P") {
        auto p = parse_params(name, params, 4);
        if (name == "Rprime") {
            return gates::R_prime(p[0], p[1], p[2], p[3]);
        }
        if (name == "Rdprime") {
            return gates::R_dprime(p[0], p[1], p[2], p[3]);
        }
        return gates::P(p[0], p[1], p[2], p[3]);
    }
    if (name == "U1" || name == "U2") {
        auto d = parse_params(name, params, 1)[0];
        return name == "U1" ? gates::U1(d) : gates::U2(d);
    }
    throw UnknownNameError("unknown gate '" + std::string(spec) + "'");
}

std::vector<GateEntry> gate_catalog() {
    std::vector<GateEntry> out;
    for (const auto &[name, entry] : fixed_gates()) {
        out.push_back({name, entry.second});
    }
    out.push_back({"Rprime:a,b,c,d", "[[a,0,0,0],[0,0,b,0],[0,c,0,0],[0,0,0,d]], unit parameters"});
    out.push_back({"Rdprime:a,b,c,d", "[[0,0,0,a],[0,b,0,0],[0,0,c,0],[d,0,0,0]], unit parameters"});
    out.push_back({"P:a,b,c,d", "diag(a,b,c,d), unit parameters"});
    out.push_back({"U1:d", "Temperley-Lieb generator [[d,0],[0,0]]"});
    out.push_back({"U2:d", "Temperley-Lieb generator paired with U1"});
    return out;
}

}  // namespace braidgate
