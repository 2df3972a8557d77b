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

#include "braidgate/gates.h"

#include <cmath>
#include <string>

namespace braidgate::gates {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void require_unit(Complex z, const char *gate) {
    if (std::abs(std::abs(z) - 1.0) > 1e-12) {
        throw std::invalid_argument(std::string(gate) + " parameters must be unit complex numbers");
    }
}

}  // namespace

ComplexMatrix R() {
    const double s = kInvSqrt2;
    return {
        {s, 0, 0, s},
        {0, s, -s, 0},
        {0, s, s, 0},
        {-s, 0, 0, s},
    };
}

ComplexMatrix R_inverse() {
    return transpose(R());
}

ComplexMatrix R_prime(Complex a, Complex b, Complex c, Complex d) {
    for (Complex z : {a, b, c, d}) {
        require_unit(z, "R'");
    }
    return {
        {a, 0, 0, 0},
        {0, 0, b, 0},
        {0, c, 0, 0},
        {0, 0, 0, d},
    };
}

ComplexMatrix R_dprime(Complex a, Complex b, Complex c, Complex d) {
    for (Complex z : {a, b, c, d}) {
        require_unit(z, "R''");
    }
    return {
        {0, 0, 0, a},
        {0, b, 0, 0},
        {0, 0, c, 0},
        {d, 0, 0, 0},
    };
}

ComplexMatrix P(Complex a, Complex b, Complex c, Complex d) {
    for (Complex z : {a, b, c, d}) {
        require_unit(z, "P");
    }
    Complex diag[] = {a, b, c, d};
    return ComplexMatrix::diagonal(diag);
}

ComplexMatrix R0() {
    return R_prime(1, 1, 1, -1);
}

ComplexMatrix D() {
    Complex diag[] = {1, 1, 1, -1};
    return ComplexMatrix::diagonal(diag);
}

ComplexMatrix SWAP() {
    return R_prime(1, 1, 1, 1);
}

ComplexMatrix CNOT() {
    return {
        {1, 0, 0, 0},
        {0, 1, 0, 0},
        {0, 0, 0, 1},
        {0, 0, 1, 0},
    };
}

ComplexMatrix H() {
    const double s = kInvSqrt2;
    return {
        {s, s},
        {s, -s},
    };
}

ComplexMatrix I2() {
    return ComplexMatrix::identity(2);
}

ComplexMatrix Q() {
    const double s = kInvSqrt2;
    return {
        {s, s, 0, 0},
        {s, -s, 0, 0},
        {0, 0, s, s},
        {0, 0, s, -s},
    };
}

ComplexMatrix E() {
    return {
        {0, 0, 0, 1},
        {0, 0, -1, 0},
        {0, -1, 0, 0},
        {1, 0, 0, 0},
    };
}

ComplexMatrix X_tele() {
    return {
        {1, 0},
        {0, -1},
    };
}

ComplexMatrix Y_tele() {
    return {
        {0, 1},
        {1, 0},
    };
}

ComplexMatrix Z_tele() {
    return {
        {0, 1},
        {-1, 0},
    };
}

ComplexMatrix sigma() {
    const double s = kInvSqrt2;
    return {
        {s, kI * s},
        {kI * s, s},
    };
}

ComplexMatrix lambda() {
    const double s = kInvSqrt2;
    return {
        {s, s},
        {kI * s, -kI * s},
    };
}

ComplexMatrix mu() {
    return {
        {(1.0 - kI) / 2.0, (1.0 + kI) / 2.0},
        {(1.0 - kI) / 2.0, (-1.0 - kI) / 2.0},
    };
}

ComplexMatrix alpha() {
    const double s = kInvSqrt2;
    return {
        {s, s},
        {s, -s},
    };
}

ComplexMatrix beta() {
    const double s = kInvSqrt2;
    return {
        {-s, s},
        {kI * s, kI * s},
    };
}

ComplexMatrix gamma() {
    const double s = kInvSqrt2;
    return {
        {s, kI * s},
        {s, -kI * s},
    };
}

ComplexMatrix delta() {
    return {
        {-1, 0},
        {0, -kI},
    };
}

ComplexMatrix U1(Complex d) {
    return {
        {d, 0},
        {0, 0},
    };
}

ComplexMatrix U2(Complex d) {
    if (std::abs(d) < 1e-12) {
        throw std::domain_error("U2 is undefined at d = 0");
    }
    Complex inv = 1.0 / d;
    Complex radicand = 1.0 - inv * inv;
    // At |d| = 1 the radicand is zero; rounding in d must not turn it into a
    // square root of noise (~1e-8).
    if (std::abs(radicand) < 1e-14) {
        radicand = 0.0;
    }
    Complex off = std::sqrt(radicand);
    return {
        {inv, off},
        {off, d - inv},
    };
}

}  // namespace braidgate::gates
