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

#ifndef BRAIDGATE_RNG_H
#define BRAIDGATE_RNG_H

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "braidgate/complex_matrix.h"

namespace braidgate {

/// Seeded sampler with a platform-independent stream.
///
/// std::mt19937_64's output sequence is fixed by the standard; the
/// distributions here are implemented directly on top of it because the
/// standard library distributions are implementation-defined.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }
    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    /// Standard normal via Box-Muller.
    double normal();
    /// Uniform integer in [0, bound).
    uint64_t below(uint64_t bound);
    bool bernoulli(double p) { return uniform() < p; }
    Complex unit_complex();
    Complex complex_normal();
    /// Haar-random normalized single-qubit state.
    std::array<Complex, 2> qubit_state();

   private:
    std::mt19937_64 engine_;
};

/// Haar-random unitary by Gram-Schmidt on a complex Gaussian matrix.
ComplexMatrix random_unitary(size_t dim, Rng &rng);

/// Matrix with independent complex Gaussian entries.
ComplexMatrix random_matrix(size_t dim, Rng &rng);

/// Normalized random state with dim amplitudes.
std::vector<Complex> random_amplitudes(size_t dim, Rng &rng);

}  // namespace braidgate

#endif
