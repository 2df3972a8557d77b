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

#include "braidgate/braid_rep.h"

#include <cstdlib>
#include <string>

#include "braidgate/gates.h"
#include "braidgate/matrix_json.h"

namespace braidgate {

namespace {

void guard_strands(int n) {
    if (n > kMaxStrands) {
        throw GuardError("braid on " + std::to_string(n) + " strands exceeds the " + std::to_string(kMaxStrands) +
                         "-strand limit for dense representations");
    }
}

void require_braiding_matrix(const ComplexMatrix &r) {
    if (r.dim() != 4) {
        throw DimensionError("braiding matrix must be 4x4, got dim " + std::to_string(r.dim()));
    }
}

// Left-multiplies m by the generator placed on strands (i, i+1), where the
// generator is `g` (row-major 4x4 integers) or its transpose.
void apply_generator(std::vector<int64_t> &m, size_t dim, int n, int i, const ScaledGenerator &g, bool transposed) {
    size_t low = static_cast<size_t>(n - (i + 1));
    size_t mask = size_t{3} << low;
    std::vector<int64_t> rows(4 * dim);
    for (size_t base = 0; base < dim; base++) {
        if (base & mask) {
            continue;
        }
        size_t idx[4];
        for (size_t j = 0; j < 4; j++) {
            idx[j] = base | (j << low);
        }
        for (size_t j = 0; j < 4; j++) {
            std::copy_n(&m[idx[j] * dim], dim, &rows[j * dim]);
        }
        for (size_t gi = 0; gi < 4; gi++) {
            int64_t *dst = &m[idx[gi] * dim];
            std::fill_n(dst, dim, 0);
            for (size_t gj = 0; gj < 4; gj++) {
                int coeff = transposed ? g[gj * 4 + gi] : g[gi * 4 + gj];
                if (coeff == 0) {
                    continue;
                }
                const int64_t *src = &rows[gj * dim];
                for (size_t c = 0; c < dim; c++) {
                    int64_t term;
                    if (__builtin_mul_overflow(src[c], static_cast<int64_t>(coeff), &term) ||
                        __builtin_add_overflow(dst[c], term, &dst[c])) {
                        throw GuardError("exact braid representation overflowed 64 bits");
                    }
                }
            }
        }
    }
}

}  // namespace

ComplexMatrix rep_matrix(const BraidWord &b, const ComplexMatrix &r) {
    require_braiding_matrix(r);
    guard_strands(b.n_strands());
    auto r_inv = is_unitary(r, Tolerance::exact()) ? dagger(r) : inverse(r);
    int n = b.n_strands();
    auto m = ComplexMatrix::identity(size_t{1} << n);
    for (int g : b.letters()) {
        m = apply_left(g > 0 ? r : r_inv, static_cast<size_t>(std::abs(g)), static_cast<size_t>(n), m);
    }
    return m;
}

ExactScaledMatrix rep_exact(const BraidWord &b) {
    return rep_exact(b, scaled_R());
}

ExactScaledMatrix rep_exact(const BraidWord &b, const ScaledGenerator &generator) {
    guard_strands(b.n_strands());
    int n = b.n_strands();
    size_t dim = size_t{1} << n;
    auto m = ExactScaledMatrix::identity(dim).entries();
    for (int g : b.letters()) {
        apply_generator(m, dim, n, std::abs(g), generator, g < 0);
    }
    return ExactScaledMatrix(dim, std::move(m), static_cast<int>(b.length()));
}

ExtendedCircuit::ExtendedCircuit(int n_strands, std::vector<CircuitItem> items)
    : n_strands_(n_strands), items_(std::move(items)) {
    if (n_strands_ < 1) {
        throw std::invalid_argument("circuit needs at least one strand");
    }
    guard_strands(n_strands_);
    for (const auto &item : items_) {
        if (const auto *br = std::get_if<BraidItem>(&item)) {
            if (br->letter == 0 || std::abs(br->letter) > n_strands_ - 1) {
                throw std::invalid_argument("braid letter " + std::to_string(br->letter) + " out of range for " +
                                            std::to_string(n_strands_) + " strands");
            }
        } else {
            const auto &local = std::get<LocalItem>(item);
            if (local.strand < 1 || local.strand > n_strands_) {
                throw std::invalid_argument("local gate strand " + std::to_string(local.strand) + " out of range");
            }
            if (local.gate.dim() != 2) {
                throw DimensionError("local gates must be 2x2");
            }
        }
    }
}

ComplexMatrix circuit_matrix(const ExtendedCircuit &c, const ComplexMatrix &r) {
    require_braiding_matrix(r);
    auto r_inv = is_unitary(r, Tolerance::exact()) ? dagger(r) : inverse(r);
    auto n = static_cast<size_t>(c.n_strands());
    auto m = ComplexMatrix::identity(size_t{1} << n);
    for (const auto &item : c.items()) {
        if (const auto *br = std::get_if<BraidItem>(&item)) {
            m = apply_left(br->letter > 0 ? r : r_inv, static_cast<size_t>(std::abs(br->letter)), n, m);
        } else {
            const auto &local = std::get<LocalItem>(item);
            m = apply_left(local.gate, static_cast<size_t>(local.strand), n, m);
        }
    }
    return m;
}

nlohmann::json circuit_to_json(const ExtendedCircuit &c) {
    nlohmann::json items = nlohmann::json::array();
    for (const auto &item : c.items()) {
        if (const auto *br = std::get_if<BraidItem>(&item)) {
            items.push_back({{"braid", br->letter}});
        } else {
            const auto &local = std::get<LocalItem>(item);
            items.push_back({{"local", {{"strand", local.strand}, {"gate", matrix_to_json(local.gate)["entries"]}}}});
        }
    }
    return {{"n", c.n_strands()}, {"items", items}};
}

ExtendedCircuit circuit_from_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
        throw std::invalid_argument("circuit JSON needs an integer \"n\"");
    }
    std::vector<CircuitItem> items;
    for (const auto &item : j.value("items", nlohmann::json::array())) {
        if (item.contains("braid")) {
            items.push_back(BraidItem{item["braid"].get<int>()});
        } else if (item.contains("local")) {
            const auto &local = item["local"];
            nlohmann::json spec = nlohmann::json::object();
            spec["dim"] = 2;
            spec["entries"] = local.at("gate");
            auto gate = matrix_from_json(spec);
            items.push_back(LocalItem{local.at("strand").get<int>(), gate});
        } else {
            throw std::invalid_argument("circuit item must be {\"braid\": i} or {\"local\": {...}}");
        }
    }
    return ExtendedCircuit(j["n"].get<int>(), std::move(items));
}

}  // namespace braidgate
