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

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <sstream>
#include <string>

#include "gadsim/config.hpp"
#include "gadsim/error.hpp"

namespace gadsim {

using Complex = std::complex<double>;

/// Dense N x N complex matrix stored row-major in a fixed array.
///
/// Only N = 2 (one polarization qubit) and N = 4 (signal and idler, or a
/// Choi matrix) are used, so everything stays on the stack.
template <std::size_t N>
struct Matrix {
    std::array<Complex, N * N> a{};

    static constexpr std::size_t dim = N;

    constexpr Complex &operator()(std::size_t row, std::size_t col) {
        return a[row * N + col];
    }
    constexpr const Complex &operator()(std::size_t row, std::size_t col) const {
        return a[row * N + col];
    }

    static constexpr Matrix zero() {
        return Matrix{};
    }

    static constexpr Matrix identity() {
        Matrix m{};
        for (std::size_t k = 0; k < N; k++) {
            m(k, k) = 1.0;
        }
        return m;
    }

    static constexpr Matrix diagonal(const std::array<Complex, N> &d) {
        Matrix m{};
        for (std::size_t k = 0; k < N; k++) {
            m(k, k) = d[k];
        }
        return m;
    }

    bool operator==(const Matrix &other) const = default;

    Matrix &operator+=(const Matrix &other) {
        for (std::size_t k = 0; k < N * N; k++) {
            a[k] += other.a[k];
        }
        return *this;
    }
    Matrix &operator-=(const Matrix &other) {
        for (std::size_t k = 0; k < N * N; k++) {
            a[k] -= other.a[k];
        }
        return *this;
    }
    Matrix &operator*=(Complex s) {
        for (auto &x : a) {
            x *= s;
        }
        return *this;
    }
};

using Mat2 = Matrix<2>;
using Mat4 = Matrix<4>;

template <std::size_t N>
Matrix<N> operator+(Matrix<N> lhs, const Matrix<N> &rhs) {
    return lhs += rhs;
}
template <std::size_t N>
Matrix<N> operator-(Matrix<N> lhs, const Matrix<N> &rhs) {
    return lhs -= rhs;
}
template <std::size_t N>
Matrix<N> operator*(Complex s, Matrix<N> m) {
    return m *= s;
}
template <std::size_t N>
Matrix<N> operator*(Matrix<N> m, Complex s) {
    return m *= s;
}

template <std::size_t N>
Matrix<N> mat_mul(const Matrix<N> &lhs, const Matrix<N> &rhs) {
    Matrix<N> out{};
    for (std::size_t i = 0; i < N; i++) {
        for (std::size_t k = 0; k < N; k++) {
            const Complex l = lhs(i, k);
            for (std::size_t j = 0; j < N; j++) {
                out(i, j) += l * rhs(k, j);
            }
        }
    }
    return out;
}

template <std::size_t N>
Matrix<N> operator*(const Matrix<N> &lhs, const Matrix<N> &rhs) {
    return mat_mul(lhs, rhs);
}

/// Conjugate transpose.
template <std::size_t N>
Matrix<N> adjoint(const Matrix<N> &m) {
    Matrix<N> out{};
    for (std::size_t i = 0; i < N; i++) {
        for (std::size_t j = 0; j < N; j++) {
            out(i, j) = std::conj(m(j, i));
        }
    }
    return out;
}

template <std::size_t N>
Complex trace(const Matrix<N> &m) {
    Complex t = 0;
    for (std::size_t k = 0; k < N; k++) {
        t += m(k, k);
    }
    return t;
}

/// Largest entrywise modulus.
template <std::size_t N>
double max_abs(const Matrix<N> &m) {
    double best = 0;
    for (const auto &x : m.a) {
        best = std::max(best, std::abs(x));
    }
    return best;
}

template <std::size_t N>
double max_abs_diff(const Matrix<N> &lhs, const Matrix<N> &rhs) {
    return max_abs(lhs - rhs);
}

/// Largest |m(i,j) - conj(m(j,i))|.
template <std::size_t N>
double hermiticity_defect(const Matrix<N> &m) {
    double best = 0;
    for (std::size_t i = 0; i < N; i++) {
        for (std::size_t j = i; j < N; j++) {
            best = std::max(best, std::abs(m(i, j) - std::conj(m(j, i))));
        }
    }
    return best;
}

template <std::size_t N>
bool all_finite(const Matrix<N> &m) {
    return std::all_of(m.a.begin(), m.a.end(), [](const Complex &x) {
        return std::isfinite(x.real()) && std::isfinite(x.imag());
    });
}

/// Eigenvalues of a 2x2 Hermitian matrix, ascending, from the closed-form
/// quadratic: mean -/+ hypot((a - d) / 2, |b|).
inline std::array<double, 2> eig_hermitian_2(const Mat2 &m) {
    if (!all_finite(m) || hermiticity_defect(m) > Tolerances::eig_input_hermitian) {
        throw Error(ErrorCode::NonHermitianInput, "eig_hermitian_2 requires a Hermitian matrix");
    }
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double mean = 0.5 * (a + d);
    const double radius = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
    return {mean - radius, mean + radius};
}

namespace detail {

inline double offdiag_norm(const Mat4 &m) {
    double s = 0;
    for (std::size_t i = 0; i < 4; i++) {
        for (std::size_t j = 0; j < 4; j++) {
            if (i != j) {
                s += std::norm(m(i, j));
            }
        }
    }
    return std::sqrt(s);
}

}  // namespace detail

/// Eigenvalues of a 4x4 Hermitian matrix, ascending, by cyclic complex Jacobi
/// rotations until the off-diagonal Frobenius norm is at most
/// Tolerances::jacobi_offdiag (or the sweep cap is reached).
inline std::array<double, 4> eig_hermitian_4(const Mat4 &input) {
    if (!all_finite(input) || hermiticity_defect(input) > Tolerances::eig_input_hermitian) {
        throw Error(ErrorCode::NonHermitianInput, "eig_hermitian_4 requires a Hermitian matrix");
    }
    // Symmetrize so rotations act on an exactly Hermitian matrix.
    Mat4 m = 0.5 * (input + adjoint(input));

    for (int sweep = 0; sweep < Tolerances::jacobi_max_sweeps; sweep++) {
        if (detail::offdiag_norm(m) <= Tolerances::jacobi_offdiag) {
            break;
        }
        for (std::size_t p = 0; p < 3; p++) {
            for (std::size_t q = p + 1; q < 4; q++) {
                const Complex apq = m(p, q);
                const double r = std::abs(apq);
                if (r == 0) {
                    continue;
                }
                // Phase e^{-i arg(apq)} makes the (p,q) element real, then a
                // real Givens rotation annihilates it.
                const Complex phase = std::conj(apq) / r;
                const double app = m(p, p).real();
                const double aqq = m(q, q).real();
                const double tau = (aqq - app) / (2 * r);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(tau * tau + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;

                Mat4 u = Mat4::identity();
                u(p, p) = c;
                u(p, q) = s;
                u(q, p) = -s * phase;
                u(q, q) = c * phase;
                m = adjoint(u) * m * u;
                m(p, q) = 0;
                m(q, p) = 0;
            }
        }
    }

    std::array<double, 4> ev{};
    for (std::size_t k = 0; k < 4; k++) {
        ev[k] = m(k, k).real();
    }
    std::sort(ev.begin(), ev.end());
    return ev;
}

/// Kronecker product a (x) b. The first factor is the signal qubit:
/// row index = 2 * signal + idler.
inline Mat4 kron(const Mat2 &a, const Mat2 &b) {
    Mat4 out{};
    for (std::size_t i = 0; i < 2; i++) {
        for (std::size_t j = 0; j < 2; j++) {
            for (std::size_t k = 0; k < 2; k++) {
                for (std::size_t l = 0; l < 2; l++) {
                    out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

/// Checks the density-matrix invariants on a square matrix. Returns an empty
/// string when valid, otherwise a description of the first violation.
template <std::size_t N>
std::string density_matrix_violation(const Matrix<N> &m) {
    if (!all_finite(m)) {
        return "non-finite entry";
    }
    const double herm = hermiticity_defect(m);
    if (herm > Tolerances::hermitian) {
        std::ostringstream ss;
        ss << "not Hermitian (defect " << herm << ")";
        return ss.str();
    }
    const Complex tr = trace(m);
    if (std::abs(tr - 1.0) > Tolerances::trace) {
        std::ostringstream ss;
        ss << "trace " << tr.real() << (tr.imag() >= 0 ? "+" : "") << tr.imag() << "i is not 1";
        return ss.str();
    }
    double lowest;
    if constexpr (N == 2) {
        lowest = eig_hermitian_2(m)[0];
    } else {
        static_assert(N == 4, "density matrices are 2x2 or 4x4");
        lowest = eig_hermitian_4(m)[0];
    }
    if (lowest < Tolerances::psd_floor) {
        std::ostringstream ss;
        ss << "not positive semidefinite (min eigenvalue " << lowest << ")";
        return ss.str();
    }
    return {};
}

/// A validated single-qubit state in the H/V basis (index 0 = H, 1 = V).
///
/// Every instance satisfies Hermiticity, unit trace and positivity within
/// Tolerances; the only ways to get one are the checked factories.
class DensityMatrix {
   public:
    /// Throws Error(InvalidState) when any invariant is violated.
    static DensityMatrix from_matrix(const Mat2 &m) {
        const std::string why = density_matrix_violation(m);
        if (!why.empty()) {
            throw Error(ErrorCode::InvalidState, why);
        }
        return DensityMatrix(m);
    }

    static DensityMatrix from_diagonal(double p_h, double p_v) {
        return from_matrix(Mat2::diagonal({p_h, p_v}));
    }

    /// 1/2 (I + r . sigma). Requires |r| <= 1.
    static DensityMatrix from_bloch(double x, double y, double z) {
        Mat2 m{};
        m(0, 0) = 0.5 * (1 + z);
        m(1, 1) = 0.5 * (1 - z);
        m(0, 1) = Complex(0.5 * x, -0.5 * y);
        m(1, 0) = Complex(0.5 * x, 0.5 * y);
        return from_matrix(m);
    }

    static DensityMatrix horizontal() {
        return DensityMatrix(Mat2::diagonal({1.0, 0.0}));
    }
    static DensityMatrix vertical() {
        return DensityMatrix(Mat2::diagonal({0.0, 1.0}));
    }
    static DensityMatrix maximally_mixed() {
        return DensityMatrix(Mat2::diagonal({0.5, 0.5}));
    }

    const Mat2 &matrix() const noexcept {
        return m_;
    }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return m_(row, col);
    }

    double p_h() const noexcept {
        return m_(0, 0).real();
    }
    double p_v() const noexcept {
        return m_(1, 1).real();
    }

    bool operator==(const DensityMatrix &other) const = default;

   private:
    explicit DensityMatrix(const Mat2 &m) : m_(m) {
    }
    Mat2 m_;
};

/// 1/2 sum |eigenvalues of (a - b)|.
inline double trace_distance(const DensityMatrix &a, const DensityMatrix &b) {
    const auto ev = eig_hermitian_2(a.matrix() - b.matrix());
    return 0.5 * (std::abs(ev[0]) + std::abs(ev[1]));
}

/// Reduced signal state of a two-qubit density matrix (signal (x) idler),
/// tracing out the idler. Throws Error(InvalidState) if `s` is not a valid
/// two-qubit density matrix.
inline DensityMatrix partial_trace_idler(const Mat4 &s) {
    const std::string why = density_matrix_violation(s);
    if (!why.empty()) {
        throw Error(ErrorCode::InvalidState, "two-qubit state " + why);
    }
    Mat2 out{};
    for (std::size_t i = 0; i < 2; i++) {
        for (std::size_t j = 0; j < 2; j++) {
            out(i, j) = s(2 * i, 2 * j) + s(2 * i + 1, 2 * j + 1);
        }
    }
    return DensityMatrix::from_matrix(out);
}

}  // namespace gadsim
