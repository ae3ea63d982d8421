// Copyright 2026 The polcirc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
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
#include <cstddef>

namespace polcirc {

/// Dense real N x N matrix, row-major, value semantics.
///
/// Only the handful of operations needed for 2x2 state algebra and the 4x4
/// polariser (x) light product space are provided.
template <std::size_t N>
struct Matrix {
    std::array<double, N * N> data{};

    static constexpr std::size_t size() { return N; }

    constexpr double& operator()(std::size_t row, std::size_t col) { return data[row * N + col]; }
    constexpr double operator()(std::size_t row, std::size_t col) const { return data[row * N + col]; }

    static constexpr Matrix identity() {
        Matrix m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }

    constexpr Matrix transposed() const {
        Matrix t;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    constexpr double trace() const {
        double s = 0.0;
        for (std::size_t i = 0; i < N; ++i) s += (*this)(i, i);
        return s;
    }

    constexpr Matrix& operator+=(const Matrix& o) {
        for (std::size_t k = 0; k < N * N; ++k) data[k] += o.data[k];
        return *this;
    }
    constexpr Matrix& operator-=(const Matrix& o) {
        for (std::size_t k = 0; k < N * N; ++k) data[k] -= o.data[k];
        return *this;
    }
    constexpr Matrix& operator*=(double s) {
        for (auto& x : data) x *= s;
        return *this;
    }

    friend constexpr Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend constexpr Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend constexpr Matrix operator*(Matrix a, double s) { return a *= s; }
    friend constexpr Matrix operator*(double s, Matrix a) { return a *= s; }

    friend constexpr Matrix operator*(const Matrix& a, const Matrix& b) {
        Matrix c;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t k = 0; k < N; ++k) {
                const double aik = a(i, k);
                for (std::size_t j = 0; j < N; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend constexpr bool operator==(const Matrix&, const Matrix&) = default;
};

using Matrix2 = Matrix<2>;
using Matrix4 = Matrix<4>;

template <std::size_t N>
double max_abs_diff(const Matrix<N>& a, const Matrix<N>& b) {
    double m = 0.0;
    for (std::size_t k = 0; k < N * N; ++k) m = std::max(m, std::abs(a.data[k] - b.data[k]));
    return m;
}

/// R(theta): counter-clockwise rotation of the plane.
inline Matrix2 rotation(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return Matrix2{{c, -s, s, c}};
}

/// Orthogonal projector onto the unit vector at polar angle theta.
inline Matrix2 projector(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return Matrix2{{c * c, c * s, c * s, s * s}};
}

inline constexpr Matrix2 sigma1() { return Matrix2{{0.0, 1.0, 1.0, 0.0}}; }
inline constexpr Matrix2 sigma3() { return Matrix2{{1.0, 0.0, 0.0, -1.0}}; }
// tau2 = -i sigma2, the generator of plane rotations.
inline constexpr Matrix2 tau2() { return Matrix2{{0.0, -1.0, 1.0, 0.0}}; }

/// Kronecker product; `left` is the polariser factor, `right` the light factor.
/// Entry ((2i+k), (2j+l)) = left(i,j) * right(k,l).
inline Matrix4 kron(const Matrix2& left, const Matrix2& right) {
    Matrix4 m;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) m(2 * i + k, 2 * j + l) = left(i, j) * right(k, l);
    return m;
}

/// Trace over the left (polariser) factor; returns the light marginal.
inline Matrix2 trace_out_left(const Matrix4& m) {
    Matrix2 r;
    for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) r(k, l) = m(k, l) + m(2 + k, 2 + l);
    return r;
}

/// Trace over the right (light) factor; returns the polariser marginal.
inline Matrix2 trace_out_right(const Matrix4& m) {
    Matrix2 r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) r(i, j) = m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1);
    return r;
}

}  // namespace polcirc
