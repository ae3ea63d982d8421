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

// Real two-dimensional quantum state algebra.
//
// A density matrix on the real plane is fixed by a point (r, phi) of the
// upper half unit disk:
//
//   rho_{r,phi} = 1/2 [ 1 + r cos2phi    r sin2phi   ]
//                     [ r sin2phi        1 - r cos2phi ]
//
// r = 1 is a pure state (projector on the direction phi), r = 0 the
// maximally mixed state. rho is pi-periodic in phi, so every DensityState
// stores phi reduced into [0, pi).

#include <numbers>

#include "polcirc/matrix.hpp"

namespace polcirc {

inline constexpr double kPi = std::numbers::pi;

/// Reduces an angle into the canonical half-turn range [0, pi).
double canonical_angle(double phi);

/// Representative of a (mod pi) angle difference in (-pi/2, pi/2].
double angle_difference(double a, double b);

class DensityState {
public:
    /// Validating constructor: r in [0, 1], both inputs finite. phi is reduced mod pi.
    static DensityState make(double r, double phi);

    /// Maximally mixed state (0, 0).
    DensityState() = default;

    double r() const { return r_; }
    double phi() const { return phi_; }

    friend bool operator==(const DensityState&, const DensityState&) = default;

private:
    DensityState(double r, double phi) : r_(r), phi_(phi) {}

    double r_ = 0.0;
    double phi_ = 0.0;
};

inline DensityState make_state(double r, double phi) { return DensityState::make(r, phi); }

Matrix2 to_matrix(const DensityState& s);

/// Inverse of to_matrix. Requires a symmetric, unit-trace, non-negative matrix
/// (each within 1e-12). A degenerate spectrum yields phi = 0.
DensityState from_matrix(const Matrix2& m);

/// R(theta) rho R(-theta) = rho_{r, phi + theta}.
DensityState rotate_state(const DensityState& s, double theta);

/// -Tr(rho ln rho), with 0 ln 0 := 0.
double von_neumann_entropy(const DensityState& s);

/// Linear Stokes coordinates; `circular` is carried but must be 0 here.
struct StokesVector {
    double xi1 = 0.0;
    double xi3 = 0.0;
    double circular = 0.0;
};

StokesVector to_stokes(const DensityState& s);
DensityState from_stokes(const StokesVector& v);

/// w1 * rho1 + w2 * rho2 for convex weights (w1 + w2 = 1 within 1e-12).
DensityState convex_combine(double w1, const DensityState& s1, double w2, const DensityState& s2);

/// Observable with spectral form lambda_par P_gamma + lambda_perp P_{gamma + pi/2}.
struct Observable {
    double lambda_par = 0.0;
    double lambda_perp = 0.0;
    double gamma = 0.0;

    static Observable make(double lambda_par, double lambda_perp, double gamma);
};

Matrix2 observable_matrix(const Observable& o);

}  // namespace polcirc
