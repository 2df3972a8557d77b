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

#ifndef BRAIDGATE_COMPLEX_MATRIX_H
#define BRAIDGATE_COMPLEX_MATRIX_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace braidgate {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Raised when an operation receives operands of incompatible dimension.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when a request exceeds the desk-scale size guards.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Comparison tolerance. `exact` is used for identities that hold exactly in
/// exact arithmetic, `phase` for comparisons after fitting a global phase.
struct Tolerance {
    double eps;

    static constexpr Tolerance exact() { return {1e-12}; }
    static constexpr Tolerance phase() { return {1e-9}; }
};

/// Dense square complex matrix, row-major.
///
/// Values are immutable once built; every operation returns a new matrix.
/// Multi-qubit bases are big-endian: for dim 4 the basis order is
/// |00>, |01>, |10>, |11>, and qubit 1 is the most significant bit.
class ComplexMatrix {
   public:
    ComplexMatrix() : ComplexMatrix(1) {}
    /// Zero matrix.
    explicit ComplexMatrix(size_t dim);
    ComplexMatrix(size_t dim, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(size_t dim);
    static ComplexMatrix diagonal(std::span<const Complex> diag);

    size_t dim() const { return dim_; }
    const Complex &operator()(size_t row, size_t col) const { return entries_[row * dim_ + col]; }
    std::span<const Complex> entries() const { return entries_; }

    /// Number of qubits when dim is a power of two; throws otherwise.
    size_t num_qubits() const;

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    size_t dim_;
    std::vector<Complex> entries_;
};

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix dagger(const ComplexMatrix &a);
ComplexMatrix transpose(const ComplexMatrix &a);
ComplexMatrix conjugate(const ComplexMatrix &a);
Complex trace(const ComplexMatrix &a);

/// Contracts the last tensor factor of dimension `sub_dim`:
/// result[a, b] = sum_k a[(a, k), (b, k)].
ComplexMatrix partial_trace_last(const ComplexMatrix &a, size_t sub_dim);

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex s, const ComplexMatrix &a);

/// Matrix power for nonnegative exponents.
ComplexMatrix power(const ComplexMatrix &a, unsigned exponent);

/// Inverse by Gauss-Jordan elimination with partial pivoting.
ComplexMatrix inverse(const ComplexMatrix &a);

Complex determinant(const ComplexMatrix &a);

/// Numerical rank by full-pivot elimination; pivots below `eps` count as zero.
size_t numerical_rank(const ComplexMatrix &a, double eps);

/// Max-absolute-entry norm of a - b.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
double max_abs(const ComplexMatrix &a);

bool is_unitary(const ComplexMatrix &a, Tolerance tol = Tolerance::exact());

bool all_finite(const ComplexMatrix &a);

struct PhaseFit {
    bool equal;
    /// Fitted unit scalar with a ~= phase * b.
    Complex phase;
    /// max |a - phase * b|
    double residual;
};

/// Decides whether a = lambda * b for some unit lambda. lambda is read off the
/// largest-magnitude entry of b.
PhaseFit equal_up_to_phase(const ComplexMatrix &a, const ComplexMatrix &b, Tolerance tol = Tolerance::phase());

/// Places `gate` (dim 2^k) on strands first..first+k-1 of an n-strand register
/// (1-based), identities elsewhere.
ComplexMatrix place(const ComplexMatrix &gate, size_t first_strand, size_t n_strands);

/// Computes placed(gate) * m without forming the placed matrix.
ComplexMatrix apply_left(const ComplexMatrix &gate, size_t first_strand, size_t n_strands, const ComplexMatrix &m);

}  // namespace braidgate

#endif
