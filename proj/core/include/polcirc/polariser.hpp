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

// von Neumann interaction between a quantum polariser (ancilla) and
// linearly polarised light.
//
// The completed interaction is the orthogonal operator
//
//   U = R(lambda_par) (x) P_gamma + R(lambda_perp) (x) P_{gamma + pi/2}
//
// on polariser (x) light. The polariser is always the left tensor factor.

#include "polcirc/matrix.hpp"
#include "polcirc/plane.hpp"

namespace polcirc {

struct PolariserGate {
    double gamma = 0.0;  // filter eigenangle, [0, pi)
    double lambda_par = 0.0;
    double lambda_perp = 0.0;
    DensityState ancilla;

    static PolariserGate make(double gamma, double lambda_par, double lambda_perp, const DensityState& ancilla);

    double coupling() const { return lambda_par - lambda_perp; }
    Observable observable() const { return Observable::make(lambda_par, lambda_perp, gamma); }
};

/// U (rho_P (x) rho_L) U^T.
struct JointState {
    Matrix4 matrix;
};

Matrix4 evolution_operator(const PolariserGate& g);

JointState joint_evolve(const PolariserGate& g, const DensityState& light);

/// Partial traces of a joint state.
DensityState light_marginal(const JointState& j);
DensityState polariser_marginal(const JointState& j);

struct BornProbabilities {
    double parallel = 0.0;
    double perpendicular = 0.0;
};

BornProbabilities born_probabilities(const DensityState& light, double gamma);

/// Light state after the interaction, from the closed forms for r' and phi'.
/// Independent of the ancilla.
DensityState light_after(const PolariserGate& g, const DensityState& light);

/// Same, parameterised directly by cos(lambda_par - lambda_perp).
DensityState light_after_coupling(const DensityState& light, double gamma, double cos_coupling);

/// Ideal gate (coupling an odd multiple of pi/2): r' = r|cos 2(gamma - phi)|.
/// phi' = gamma while |gamma - phi| <= pi/4 (mod pi), gamma + pi/2 beyond.
DensityState ideal_gate_apply(const DensityState& light, double gamma);

/// Ancilla state after the interaction: Born-weighted mixture of the ancilla
/// rotated by lambda_par and by lambda_perp.
DensityState polariser_after(const PolariserGate& g, const DensityState& light);

struct InteractionOutcome {
    DensityState light_after;
    DensityState polariser_after;
    double p_parallel = 0.0;
    double p_perp = 0.0;
};

InteractionOutcome interact(const PolariserGate& g, const DensityState& light);

struct Diattenuation {
    double diattenuation = 0.0;
    double extinction_ratio = 0.0;  // +infinity for the ideal polariser
    bool ideal = false;
};

Diattenuation diattenuation(double light_after_r);

/// First-order comparison between the exact gate action with
/// cos(coupling) = 1 - delta and an alpha = 0 GKLS step of length delta.
struct InfinitesimalCheck {
    double beta_eff = 0.0;
    double energy_eff = 0.0;
    double r_error = 0.0;
    double phi_error = 0.0;
};

InfinitesimalCheck infinitesimal_consistency(double gamma, double phi0, double delta, double r0 = 1.0);

}  // namespace polcirc
