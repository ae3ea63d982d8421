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

// Independent oracles and random draws shared by the unit tests. Everything
// here goes through Eigen rather than the library's own matrix helpers.

#include <Eigen/Dense>

#include <cmath>
#include <random>

#include "polcirc/matrix.hpp"
#include "polcirc/plane.hpp"

namespace polcirc::testing {

inline Eigen::Matrix2d to_eigen(const Matrix2& m) {
    Eigen::Matrix2d e;
    e << m(0, 0), m(0, 1), m(1, 0), m(1, 1);
    return e;
}

inline Eigen::Matrix4d to_eigen(const Matrix4& m) {
    Eigen::Matrix4d e;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) e(i, j) = m(i, j);
    return e;
}

/// rho_{r,phi} written out directly.
inline Eigen::Matrix2d density(double r, double phi) {
    Eigen::Matrix2d m;
    m << 1 + r * std::cos(2 * phi), r * std::sin(2 * phi), r * std::sin(2 * phi), 1 - r * std::cos(2 * phi);
    return 0.5 * m;
}

inline Eigen::Matrix2d rot(double t) {
    Eigen::Matrix2d m;
    m << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    return m;
}

inline Eigen::Matrix2d proj(double t) {
    Eigen::Vector2d v(std::cos(t), std::sin(t));
    return v * v.transpose();
}

/// Block-form Kronecker product with the polariser as the outer factor.
inline Eigen::Matrix4d kron_eigen(const Eigen::Matrix2d& a, const Eigen::Matrix2d& b) {
    Eigen::Matrix4d m;
    m << a(0, 0) * b, a(0, 1) * b, a(1, 0) * b, a(1, 1) * b;
    return m;
}

inline Eigen::Matrix2d trace_polariser(const Eigen::Matrix4d& m) {
    return m.block<2, 2>(0, 0) + m.block<2, 2>(2, 2);
}

inline Eigen::Matrix2d trace_light(const Eigen::Matrix4d& m) {
    Eigen::Matrix2d r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = m.block<2, 2>(2 * i, 2 * j).trace();
    return r;
}

/// Sum of |eigenvalues| / 2.
inline double trace_norm_half(const Eigen::Matrix2d& d) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(d);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

inline double entropy_eigen(const Eigen::Matrix2d& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(rho);
    double s = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double l = es.eigenvalues()(i);
        if (l > 0.0) s -= l * std::log(l);
    }
    return s;
}

class Draws {
public:
    explicit Draws(std::uint64_t seed = 12345) : rng_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    DensityState state() { return make_state(uniform(0.0, 1.0), uniform(0.0, kPi)); }
    double sign() { return uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0; }

private:
    std::mt19937_64 rng_;
};

}  // namespace polcirc::testing
