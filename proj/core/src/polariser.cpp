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

#include "polcirc/polariser.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "polcirc/error.hpp"

namespace polcirc {

namespace {

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) throw ValidationError(std::string(what) + " must be finite");
}

// Symmetrises away rounding before handing a 4x4 marginal to from_matrix.
Matrix2 symmetrised(const Matrix2& m) {
    const double off = 0.5 * (m(0, 1) + m(1, 0));
    return Matrix2{{m(0, 0), off, off, m(1, 1)}};
}

}  // namespace

PolariserGate PolariserGate::make(double gamma, double lambda_par, double lambda_perp, const DensityState& ancilla) {
    require_finite(gamma, "gamma");
    require_finite(lambda_par, "lambda_par");
    require_finite(lambda_perp, "lambda_perp");
    return {canonical_angle(gamma), lambda_par, lambda_perp, ancilla};
}

Matrix4 evolution_operator(const PolariserGate& g) {
    return kron(rotation(g.lambda_par), projector(g.gamma)) +
           kron(rotation(g.lambda_perp), projector(g.gamma + kPi / 2));
}

JointState joint_evolve(const PolariserGate& g, const DensityState& light) {
    const Matrix4 u = evolution_operator(g);
    return {u * kron(to_matrix(g.ancilla), to_matrix(light)) * u.transposed()};
}

DensityState light_marginal(const JointState& j) { return from_matrix(symmetrised(trace_out_left(j.matrix))); }

DensityState polariser_marginal(const JointState& j) { return from_matrix(symmetrised(trace_out_right(j.matrix))); }

BornProbabilities born_probabilities(const DensityState& light, double gamma) {
    require_finite(gamma, "gamma");
    const double p = 0.5 * (1.0 + light.r() * std::cos(2.0 * (gamma - light.phi())));
    return {p, 1.0 - p};
}

DensityState light_after_coupling(const DensityState& light, double gamma, double cos_coupling) {
    require_finite(gamma, "gamma");
    require_finite(cos_coupling, "coupling");
    const double zeta = 2.0 * (gamma - light.phi());
    const double cz = std::cos(zeta), sz = std::sin(zeta);
    const double c2g = std::cos(2.0 * gamma), s2g = std::sin(2.0 * gamma);
    const double a = cz * c2g + cos_coupling * sz * s2g;
    const double b = cz * s2g - cos_coupling * sz * c2g;
    const double norm = std::hypot(a, b);
    if (norm == 0.0 || light.r() == 0.0) return DensityState::make(0.0, 0.0);
    return DensityState::make(std::min(1.0, light.r() * norm), 0.5 * std::atan2(b, a));
}

DensityState light_after(const PolariserGate& g, const DensityState& light) {
    return light_after_coupling(light, g.gamma, std::cos(g.coupling()));
}

DensityState ideal_gate_apply(const DensityState& light, double gamma) {
    require_finite(gamma, "gamma");
    const double c = std::cos(2.0 * (gamma - light.phi()));
    return DensityState::make(light.r() * std::abs(c), c >= 0.0 ? gamma : gamma + kPi / 2);
}

DensityState polariser_after(const PolariserGate& g, const DensityState& light) {
    const BornProbabilities p = born_probabilities(light, g.gamma);
    return convex_combine(p.parallel, rotate_state(g.ancilla, g.lambda_par), p.perpendicular,
                          rotate_state(g.ancilla, g.lambda_perp));
}

InteractionOutcome interact(const PolariserGate& g, const DensityState& light) {
    const BornProbabilities p = born_probabilities(light, g.gamma);
    return {light_after(g, light), polariser_after(g, light), p.parallel, p.perpendicular};
}

Diattenuation diattenuation(double light_after_r) {
    require_finite(light_after_r, "r'");
    if (light_after_r < 0.0 || light_after_r > 1.0) throw ValidationError("r' must lie in [0, 1]");
    // T_max = (1 + r')/2, T_min = (1 - r')/2, so D = r'.
    if (light_after_r == 1.0) return {1.0, std::numeric_limits<double>::infinity(), true};
    return {light_after_r, (1.0 + light_after_r) / (1.0 - light_after_r), false};
}

InfinitesimalCheck infinitesimal_consistency(double gamma, double phi0, double delta, double r0) {
    require_finite(gamma, "gamma");
    require_finite(phi0, "phi0");
    require_finite(delta, "delta");
    if (!(delta > 0.0 && delta <= 1e-3)) throw ValidationError("delta must lie in (0, 1e-3]");
    if (std::abs(std::sin(phi0)) < 1e-6) throw ValidationError("|sin phi0| must be at least 1e-6");

    const DensityState light = DensityState::make(r0, phi0);
    const DensityState exact = light_after_coupling(light, gamma, 1.0 - delta);

    const double zeta = 2.0 * (gamma - phi0);
    const double beta_eff = std::sin(zeta) * std::sin(zeta);
    const double dphi_rate = std::sin(zeta) / (2.0 * std::sin(phi0)) *
                             (std::sin(2.0 * gamma - phi0) - std::cos(phi0) * std::sin(zeta));
    const double energy_eff = -dphi_rate;

    const double r_pred = r0 * std::exp(-delta * beta_eff);
    const double phi_pred = phi0 - delta * energy_eff;
    return {beta_eff, energy_eff, std::abs(exact.r() - r_pred), std::abs(angle_difference(exact.phi(), phi_pred))};
}

}  // namespace polcirc
