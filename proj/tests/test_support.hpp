// Copyright 2026 The gadsim Authors
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

#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "gadsim/smallmat.hpp"

namespace gadsim::testing {

// Uniform point in the Bloch ball -> valid single-qubit state.
inline DensityMatrix random_state(std::mt19937_64 &gen) {
    std::uniform_real_distribution<double> u(0, 1);
    const double z = 2 * u(gen) - 1;
    const double az = 2 * std::numbers::pi * u(gen);
    const double r = std::cbrt(u(gen));
    const double s = std::sqrt(1 - z * z);
    return DensityMatrix::from_bloch(r * s * std::cos(az), r * s * std::sin(az), r * z);
}

inline Mat2 random_mat2(std::mt19937_64 &gen) {
    std::normal_distribution<double> n(0, 1);
    Mat2 m;
    for (auto &x : m.a) {
        x = Complex(n(gen), n(gen));
    }
    return m;
}

inline Mat4 random_hermitian4(std::mt19937_64 &gen) {
    std::normal_distribution<double> n(0, 1);
    Mat4 m;
    for (auto &x : m.a) {
        x = Complex(n(gen), n(gen));
    }
    return 0.5 * (m + adjoint(m));
}

// det(A - lambda I) by Gaussian elimination with partial pivoting.
template <std::size_t N>
Complex char_poly(const Matrix<N> &a, double lambda) {
    Matrix<N> m = a - lambda * Matrix<N>::identity();
    Complex det = 1;
    for (std::size_t c = 0; c < N; c++) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < N; r++) {
            if (std::abs(m(r, c)) > std::abs(m(piv, c))) {
                piv = r;
            }
        }
        if (m(piv, c) == Complex(0)) {
            return 0;
        }
        if (piv != c) {
            for (std::size_t k = 0; k < N; k++) {
                std::swap(m(c, k), m(piv, k));
            }
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < N; r++) {
            const Complex f = m(r, c) / m(c, c);
            for (std::size_t k = c; k < N; k++) {
                m(r, k) -= f * m(c, k);
            }
        }
    }
    return det;
}

}  // namespace gadsim::testing
