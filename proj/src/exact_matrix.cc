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

#include "braidgate/exact_matrix.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace braidgate {

namespace {

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw GuardError("exact matrix entry overflowed 64 bits");
    }
    return out;
}

int64_t checked_add(int64_t a, int64_t b) {
    int64_t out;
    if (__builtin_add_overflow(a, b, &out)) {
        throw GuardError("exact matrix entry overflowed 64 bits");
    }
    return out;
}

}  // namespace

ExactScaledMatrix::ExactScaledMatrix(size_t dim, std::vector<int64_t> entries, int scale_exp)
    : dim_(dim), entries_(std::move(entries)), scale_exp_(scale_exp) {
    if (dim_ == 0 || entries_.size() != dim_ * dim_) {
        throw DimensionError("exact matrix needs dim*dim entries");
    }
    if (scale_exp_ < 0) {
        throw std::invalid_argument("exact matrix scale exponent must be nonnegative");
    }
}

ExactScaledMatrix ExactScaledMatrix::identity(size_t dim) {
    std::vector<int64_t> e(dim * dim);
    for (size_t k = 0; k < dim; k++) {
        e[k * dim + k] = 1;
    }
    return ExactScaledMatrix(dim, std::move(e), 0);
}

int64_t ExactScaledMatrix::trace_int() const {
    int64_t t = 0;
    for (size_t k = 0; k < dim_; k++) {
        t = checked_add(t, entries_[k * dim_ + k]);
    }
    return t;
}

ExactScaledMatrix ExactScaledMatrix::canonical() const {
    auto e = entries_;
    int exp = scale_exp_;
    auto all_even = [&] { return std::ranges::all_of(e, [](int64_t x) { return x % 2 == 0; }); };
    while (exp >= 2 && all_even()) {
        for (auto &x : e) {
            x /= 2;
        }
        exp -= 2;
    }
    return ExactScaledMatrix(dim_, std::move(e), exp);
}

ExactScaledMatrix ExactScaledMatrix::rescaled(int new_exp) const {
    int delta = new_exp - scale_exp_;
    if (delta < 0 || delta % 2 != 0) {
        throw std::invalid_argument("exact rescale by sqrt(2)^" + std::to_string(delta) + " leaves the integers");
    }
    auto e = entries_;
    int64_t factor = 1;
    for (int k = 0; k < delta / 2; k++) {
        factor = checked_mul(factor, 2);
    }
    for (auto &x : e) {
        x = checked_mul(x, factor);
    }
    return ExactScaledMatrix(dim_, std::move(e), new_exp);
}

ComplexMatrix ExactScaledMatrix::to_complex() const {
    double scale = std::pow(2.0, -0.5 * scale_exp_);
    std::vector<Complex> e(entries_.size());
    for (size_t k = 0; k < e.size(); k++) {
        e[k] = static_cast<double>(entries_[k]) * scale;
    }
    return ComplexMatrix(dim_, std::move(e));
}

bool ExactScaledMatrix::operator==(const ExactScaledMatrix &other) const {
    if (dim_ != other.dim_) {
        return false;
    }
    auto a = canonical();
    auto b = other.canonical();
    if ((a.scale_exp_ - b.scale_exp_) % 2 != 0) {
        // sqrt(2)^odd is irrational: only the zero matrix matches across parity.
        auto zero = [](const ExactScaledMatrix &m) { return std::ranges::all_of(m.entries_, [](int64_t x) { return x == 0; }); };
        return zero(a) && zero(b);
    }
    int target = std::max(a.scale_exp_, b.scale_exp_);
    return a.rescaled(target).entries_ == b.rescaled(target).entries_;
}

ExactScaledMatrix operator+(const ExactScaledMatrix &a, const ExactScaledMatrix &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("exact add: dimension mismatch");
    }
    int target = std::max(a.scale_exp(), b.scale_exp());
    auto ra = a.rescaled(target);
    auto rb = b.rescaled(target);
    std::vector<int64_t> e(ra.entries().size());
    for (size_t k = 0; k < e.size(); k++) {
        e[k] = checked_add(ra.entries()[k], rb.entries()[k]);
    }
    return ExactScaledMatrix(a.dim(), std::move(e), target);
}

ExactScaledMatrix sqrt2_times_identity(size_t dim, int64_t s) {
    std::vector<int64_t> e(dim * dim);
    for (size_t k = 0; k < dim; k++) {
        e[k * dim + k] = checked_mul(2, s);
    }
    return ExactScaledMatrix(dim, std::move(e), 1);
}

ScaledGenerator scaled_R() {
    return {
        1, 0, 0, 1,   //
        0, 1, -1, 0,  //
        0, 1, 1, 0,   //
        -1, 0, 0, 1,  //
    };
}

}  // namespace braidgate
