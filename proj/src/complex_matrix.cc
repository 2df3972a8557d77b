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

#include "braidgate/complex_matrix.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace braidgate {

namespace {

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b, const char *what) {
    if (a.dim() != b.dim()) {
        throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                             std::to_string(b.dim()) + ")");
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0) {
        throw DimensionError("matrix dimension must be positive");
    }
}

ComplexMatrix::ComplexMatrix(size_t dim, std::vector<Complex> entries) : dim_(dim), entries_(std::move(entries)) {
    if (dim == 0) {
        throw DimensionError("matrix dimension must be positive");
    }
    if (entries_.size() != dim * dim) {
        throw DimensionError("matrix of dim " + std::to_string(dim) + " needs " + std::to_string(dim * dim) +
                             " entries, got " + std::to_string(entries_.size()));
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : dim_(rows.size()) {
    if (dim_ == 0) {
        throw DimensionError("matrix dimension must be positive");
    }
    entries_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw DimensionError("matrix literal is not square");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(size_t dim) {
    std::vector<Complex> e(dim * dim);
    for (size_t k = 0; k < dim; k++) {
        e[k * dim + k] = 1.0;
    }
    return ComplexMatrix(dim, std::move(e));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    size_t dim = diag.size();
    std::vector<Complex> e(dim * dim);
    for (size_t k = 0; k < dim; k++) {
        e[k * dim + k] = diag[k];
    }
    return ComplexMatrix(dim, std::move(e));
}

size_t ComplexMatrix::num_qubits() const {
    if (!std::has_single_bit(dim_)) {
        throw DimensionError("dimension " + std::to_string(dim_) + " is not a power of two");
    }
    return static_cast<size_t>(std::countr_zero(dim_));
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    size_t n = a.dim() * b.dim();
    std::vector<Complex> e(n * n);
    for (size_t i = 0; i < a.dim(); i++) {
        for (size_t j = 0; j < a.dim(); j++) {
            Complex aij = a(i, j);
            if (aij == Complex{}) {
                continue;
            }
            for (size_t k = 0; k < b.dim(); k++) {
                for (size_t l = 0; l < b.dim(); l++) {
                    e[(i * b.dim() + k) * n + (j * b.dim() + l)] = aij * b(k, l);
                }
            }
        }
    }
    return ComplexMatrix(n, std::move(e));
}

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "matmul");
    size_t n = a.dim();
    std::vector<Complex> e(n * n);
    for (size_t i = 0; i < n; i++) {
        for (size_t k = 0; k < n; k++) {
            Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (size_t j = 0; j < n; j++) {
                e[i * n + j] += aik * b(k, j);
            }
        }
    }
    return ComplexMatrix(n, std::move(e));
}

ComplexMatrix dagger(const ComplexMatrix &a) {
    size_t n = a.dim();
    std::vector<Complex> e(n * n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            e[j * n + i] = std::conj(a(i, j));
        }
    }
    return ComplexMatrix(n, std::move(e));
}

ComplexMatrix transpose(const ComplexMatrix &a) {
    size_t n = a.dim();
    std::vector<Complex> e(n * n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            e[j * n + i] = a(i, j);
        }
    }
    return ComplexMatrix(n, std::move(e));
}

ComplexMatrix conjugate(const ComplexMatrix &a) {
    std::vector<Complex> e(a.entries().begin(), a.entries().end());
    for (auto &z : e) {
        z = std::conj(z);
    }
    return ComplexMatrix(a.dim(), std::move(e));
}

Complex trace(const ComplexMatrix &a) {
    Complex t{};
    for (size_t k = 0; k < a.dim(); k++) {
        t += a(k, k);
    }
    return t;
}

ComplexMatrix partial_trace_last(const ComplexMatrix &a, size_t sub_dim) {
    if (sub_dim == 0 || a.dim() % sub_dim != 0) {
        throw DimensionError("partial_trace_last: dim " + std::to_string(a.dim()) + " is not divisible by " +
                             std::to_string(sub_dim));
    }
    size_t out = a.dim() / sub_dim;
    std::vector<Complex> e(out * out);
    for (size_t r = 0; r < out; r++) {
        for (size_t c = 0; c < out; c++) {
            Complex s{};
            for (size_t k = 0; k < sub_dim; k++) {
                s += a(r * sub_dim + k, c * sub_dim + k);
            }
            e[r * out + c] = s;
        }
    }
    return ComplexMatrix(out, std::move(e));
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    return matmul(a, b);
}

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "add");
    std::vector<Complex> e(a.entries().begin(), a.entries().end());
    for (size_t k = 0; k < e.size(); k++) {
        e[k] += b.entries()[k];
    }
    return ComplexMatrix(a.dim(), std::move(e));
}

ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "subtract");
    std::vector<Complex> e(a.entries().begin(), a.entries().end());
    for (size_t k = 0; k < e.size(); k++) {
        e[k] -= b.entries()[k];
    }
    return ComplexMatrix(a.dim(), std::move(e));
}

ComplexMatrix operator*(Complex s, const ComplexMatrix &a) {
    std::vector<Complex> e(a.entries().begin(), a.entries().end());
    for (auto &z : e) {
        z *= s;
    }
    return ComplexMatrix(a.dim(), std::move(e));
}

ComplexMatrix power(const ComplexMatrix &a, unsigned exponent) {
    ComplexMatrix result = ComplexMatrix::identity(a.dim());
    ComplexMatrix base = a;
    while (exponent != 0) {
        if (exponent & 1) {
            result = result * base;
        }
        exponent >>= 1;
        if (exponent != 0) {
            base = base * base;
        }
    }
    return result;
}

ComplexMatrix inverse(const ComplexMatrix &a) {
    size_t n = a.dim();
    std::vector<Complex> m(a.entries().begin(), a.entries().end());
    std::vector<Complex> inv(n * n);
    for (size_t k = 0; k < n; k++) {
        inv[k * n + k] = 1.0;
    }
    for (size_t col = 0; col < n; col++) {
        size_t pivot = col;
        for (size_t r = col + 1; r < n; r++) {
            if (std::abs(m[r * n + col]) > std::abs(m[pivot * n + col])) {
                pivot = r;
            }
        }
        if (std::abs(m[pivot * n + col]) == 0.0) {
            throw std::domain_error("inverse: matrix is singular");
        }
        if (pivot != col) {
            for (size_t j = 0; j < n; j++) {
                std::swap(m[pivot * n + j], m[col * n + j]);
                std::swap(inv[pivot * n + j], inv[col * n + j]);
            }
        }
        Complex scale = 1.0 / m[col * n + col];
        for (size_t j = 0; j < n; j++) {
            m[col * n + j] *= scale;
            inv[col * n + j] *= scale;
        }
        for (size_t r = 0; r < n; r++) {
            if (r == col) {
                continue;
            }
            Complex f = m[r * n + col];
            if (f == Complex{}) {
                continue;
            }
            for (size_t j = 0; j < n; j++) {
                m[r * n + j] -= f * m[col * n + j];
                inv[r * n + j] -= f * inv[col * n + j];
            }
        }
    }
    return ComplexMatrix(n, std::move(inv));
}

Complex determinant(const ComplexMatrix &a) {
    size_t n = a.dim();
    std::vector<Complex> m(a.entries().begin(), a.entries().end());
    Complex det = 1.0;
    for (size_t col = 0; col < n; col++) {
        size_t pivot = col;
        for (size_t r = col + 1; r < n; r++) {
            if (std::abs(m[r * n + col]) > std::abs(m[pivot * n + col])) {
                pivot = r;
            }
        }
        if (m[pivot * n + col] == Complex{}) {
            return 0.0;
        }
        if (pivot != col) {
            for (size_t j = 0; j < n; j++) {
                std::swap(m[pivot * n + j], m[col * n + j]);
            }
            det = -det;
        }
        Complex p = m[col * n + col];
        det *= p;
        for (size_t r = col + 1; r < n; r++) {
            Complex f = m[r * n + col] / p;
            for (size_t j = col; j < n; j++) {
                m[r * n + j] -= f * m[col * n + j];
            }
        }
    }
    return det;
}

size_t numerical_rank(const ComplexMatrix &a, double eps) {
    size_t n = a.dim();
    std::vector<Complex> m(a.entries().begin(), a.entries().end());
    std::vector<bool> row_used(n, false), col_used(n, false);
    size_t rank = 0;
    for (size_t step = 0; step < n; step++) {
        double best = 0;
        size_t br = 0, bc = 0;
        for (size_t r = 0; r < n; r++) {
            if (row_used[r]) {
                continue;
            }
            for (size_t c = 0; c < n; c++) {
                if (!col_used[c] && std::abs(m[r * n + c]) > best) {
                    best = std::abs(m[r * n + c]);
                    br = r;
                    bc = c;
                }
            }
        }
        if (best <= eps) {
            break;
        }
        rank++;
        row_used[br] = true;
        col_used[bc] = true;
        Complex p = m[br * n + bc];
        for (size_t r = 0; r < n; r++) {
            if (row_used[r]) {
                continue;
            }
            Complex f = m[r * n + bc] / p;
            for (size_t c = 0; c < n; c++) {
                m[r * n + c] -= f * m[br * n + c];
            }
        }
    }
    return rank;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "max_abs_diff");
    double worst = 0;
    for (size_t k = 0; k < a.entries().size(); k++) {
        worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return worst;
}

double max_abs(const ComplexMatrix &a) {
    double worst = 0;
    for (const auto &z : a.entries()) {
        worst = std::max(worst, std::abs(z));
    }
    return worst;
}

bool is_unitary(const ComplexMatrix &a, Tolerance tol) {
    if (!all_finite(a)) {
        return false;
    }
    return max_abs_diff(a * dagger(a), ComplexMatrix::identity(a.dim())) <= tol.eps;
}

bool all_finite(const ComplexMatrix &a) {
    return std::ranges::all_of(a.entries(), [](Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

PhaseFit equal_up_to_phase(const ComplexMatrix &a, const ComplexMatrix &b, Tolerance tol) {
    require_same_dim(a, b, "equal_up_to_phase");
    size_t best = 0;
    for (size_t k = 1; k < b.entries().size(); k++) {
        if (std::abs(b.entries()[k]) > std::abs(b.entries()[best])) {
            best = k;
        }
    }
    Complex phase = 1.0;
    Complex bk = b.entries()[best];
    Complex ak = a.entries()[best];
    if (std::abs(bk) > 0 && std::abs(ak) > 0) {
        Complex ratio = ak / bk;
        phase = ratio / std::abs(ratio);
    }
    double residual = max_abs_diff(a, phase * b);
    return {residual <= tol.eps, phase, residual};
}

ComplexMatrix place(const ComplexMatrix &gate, size_t first_strand, size_t n_strands) {
    return apply_left(gate, first_strand, n_strands, ComplexMatrix::identity(size_t{1} << n_strands));
}

ComplexMatrix apply_left(const ComplexMatrix &gate, size_t first_strand, size_t n_strands, const ComplexMatrix &m) {
    size_t k = gate.num_qubits();
    if (first_strand < 1 || first_strand + k - 1 > n_strands) {
        throw DimensionError("gate on strands " + std::to_string(first_strand) + ".." +
                             std::to_string(first_strand + k - 1) + " does not fit in " + std::to_string(n_strands) +
                             " strands");
    }
    size_t dim = size_t{1} << n_strands;
    if (m.dim() != dim) {
        throw DimensionError("apply_left: operand dimension does not match strand count");
    }
    size_t low = n_strands - (first_strand + k - 1);
    size_t block = gate.dim();
    size_t block_mask = (block - 1) << low;

    std::vector<Complex> out(dim * dim);
    std::vector<size_t> rows(block);
    for (size_t base = 0; base < dim; base++) {
        if (base & block_mask) {
            continue;
        }
        for (size_t j = 0; j < block; j++) {
            rows[j] = base | (j << low);
        }
        for (size_t gi = 0; gi < block; gi++) {
            Complex *dst = &out[rows[gi] * dim];
            for (size_t gj = 0; gj < block; gj++) {
                Complex g = gate(gi, gj);
                if (g == Complex{}) {
                    continue;
                }
                const Complex *src = &m.entries()[rows[gj] * dim];
                for (size_t c = 0; c < dim; c++) {
                    dst[c] += g * src[c];
                }
            }
        }
    }
    return ComplexMatrix(dim, std::move(out));
}

}  // namespace braidgate
