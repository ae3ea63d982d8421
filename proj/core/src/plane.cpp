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

#include "polcirc/plane.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "polcirc/error.hpp"

namespace polcirc {

namespace {

constexpr double kMatrixTolerance = 1e-12;
constexpr double kWeightTolerance = 1e-12;
// Below this radius the eigenvector angle is numerically meaningless.
constexpr double kDegenerateRadius = 1e-13;

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) throw ValidationError(std::string(what) + " must be finite");
}

// Builds a state from Stokes-plane coordinates that are already known to be
// consistent (|xi| <= 1 up to rounding).
DensityState state_from_xi(double xi1, double xi3) {
    double r = std::hypot(xi1, xi3);
    if (r < kDegenerateRadius) return DensityState::make(0.0, 0.0);
    r = std::min(r, 1.0);
    return DensityState::make(r, 0.5 * std::atan2(xi1, xi3));
}

}  // namespace

double canonical_angle(double phi) {
    double a = std::fmod(phi, kPi);
    if (a < 0.0) a += kPi;
    // fmod of a tiny negative number plus pi rounds to pi itself.
    if (a >= kPi) a = 0.0;
    return a;
}

double angle_difference(double a, double b) {
    double d = std::fmod(a - b, kPi);
    if (d > kPi / 2) d -= kPi;
    else if (d <= -kPi / 2) d += kPi;
    return d;
}

DensityState DensityState::make(double r, double phi) {
    require_finite(r, "r");
    require_finite(phi, "phi");
    if (r < 0.0 || r > 1.0) throw ValidationError("r must lie in [0, 1], got " + std::to_string(r));
    return DensityState(r, canonical_angle(phi));
}

Matrix2 to_matrix(const DensityState& s) {
    const double c = s.r() * std::cos(2.0 * s.phi());
    const double sn = s.r() * std::sin(2.0 * s.phi());
    return Matrix2{{0.5 * (1.0 + c), 0.5 * sn, 0.5 * sn, 0.5 * (1.0 - c)}};
}

DensityState from_matrix(const Matrix2& m) {
    for (double x : m.data) require_finite(x, "matrix entry");
    if (std::abs(m(0, 1) - m(1, 0)) > kMatrixTolerance) throw ValidationError("density matrix must be symmetric");
    if (std::abs(m.trace() - 1.0) > kMatrixTolerance) throw ValidationError("density matrix must have unit trace");
    const double xi3 = m(0, 0) - m(1, 1);
    const double xi1 = m(0, 1) + m(1, 0);
    const double gap = std::hypot(xi1, xi3);
    // Eigenvalues are (1 +- gap) / 2.
    if (0.5 * (1.0 - gap) < -kMatrixTolerance) throw ValidationError("density matrix must be non-negative");
    return state_from_xi(xi1, xi3);
}

DensityState rotate_state(const DensityState& s, double theta) {
    require_finite(theta, "theta");
    return DensityState::make(s.r(), s.phi() + theta);
}

double von_neumann_entropy(const DensityState& s) {
    auto term = [](double p) { return p > 0.0 ? -p * std::log(p) : 0.0; };
    return term(0.5 * (1.0 + s.r())) + term(0.5 * (1.0 - s.r()));
}

StokesVector to_stokes(const DensityState& s) {
    return {s.r() * std::sin(2.0 * s.phi()), s.r() * std::cos(2.0 * s.phi()), 0.0};
}

DensityState from_stokes(const StokesVector& v) {
    require_finite(v.xi1, "xi1");
    require_finite(v.xi3, "xi3");
    require_finite(v.circular, "circular polarisation");
    if (v.circular != 0.0) throw ValidationError("circular polarisation is not supported (A must be 0)");
    if (std::hypot(v.xi1, v.xi3) > 1.0 + kMatrixTolerance) throw ValidationError("Stokes vector norm exceeds 1");
    return state_from_xi(v.xi1, v.xi3);
}

DensityState convex_combine(double w1, const DensityState& s1, double w2, const DensityState& s2) {
    require_finite(w1, "weight");
    require_finite(w2, "weight");
    if (w1 < 0.0 || w2 < 0.0) throw ValidationError("convex weights must be non-negative");
    if (std::abs(w1 + w2 - 1.0) > kWeightTolerance) throw ValidationError("convex weights must sum to 1");
    // The mixture is additive in the Stokes plane: r e^{2i phi} = sum w_k r_k e^{2i phi_k}.
    const std::complex<double> z =
        w1 * std::polar(s1.r(), 2.0 * s1.phi()) + w2 * std::polar(s2.r(), 2.0 * s2.phi());
    return state_from_xi(z.imag(), z.real());
}

Observable Observable::make(double lambda_par, double lambda_perp, double gamma) {
    require_finite(lambda_par, "lambda_par");
    require_finite(lambda_perp, "lambda_perp");
    require_finite(gamma, "gamma");
    return {lambda_par, lambda_perp, canonical_angle(gamma)};
}

Matrix2 observable_matrix(const Observable& o) {
    return o.lambda_par * projector(o.gamma) + o.lambda_perp * projector(o.gamma + kPi / 2);
}

}  // namespace polcirc
