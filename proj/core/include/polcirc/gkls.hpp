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

// Open-system (GKLS) evolution of a planar density matrix.
//
// For real 2x2 states the Lindblad equation reduces to the planar system
//
//   phi_dot = alpha(t) sin 4phi - E(t)
//   r_dot/r = -2 alpha(t) cos 4phi - beta(t)
//
// with alpha = (h1 - h3)/2, beta = h1 + h3 > 0 and decay rates h1, h3 >= 0
// (equivalently |2 alpha| <= beta). Numerical integration is classical RK4
// on (phi, ln r); closed forms are provided for the constant-coefficient
// cases that admit them.

#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "polcirc/plane.hpp"

namespace polcirc {

using Coefficient = std::function<double(double)>;

inline constexpr double kDefaultStep = 1e-3;

struct ConstantCoefficients {
    double alpha = 0.0;
    double beta = 0.0;
    double energy = 0.0;
};

class GklsParams {
public:
    static GklsParams constant(double alpha, double beta, double energy);
    static GklsParams time_dependent(Coefficient alpha, Coefficient beta, Coefficient energy);

    double alpha(double t) const { return alpha_(t); }
    double beta(double t) const { return beta_(t); }
    double energy(double t) const { return energy_(t); }

    /// Throws ValidationError unless beta(t) > 0 and |2 alpha(t)| <= beta(t).
    void validate_at(double t) const;

    /// Set only for constant-coefficient parameters.
    const std::optional<ConstantCoefficients>& constants() const { return constants_; }

    /// Same dissipators, different drive.
    GklsParams with_energy(Coefficient energy) const;

private:
    GklsParams(Coefficient alpha, Coefficient beta, Coefficient energy, std::optional<ConstantCoefficients> c)
        : alpha_(std::move(alpha)), beta_(std::move(beta)), energy_(std::move(energy)), constants_(c) {}

    Coefficient alpha_;
    Coefficient beta_;
    Coefficient energy_;
    std::optional<ConstantCoefficients> constants_;
};

struct Rates {
    double phi_dot = 0.0;
    double r_dot = 0.0;
};

Rates gkls_rhs(const DensityState& s, double t, const GklsParams& p);

/// Integration variables: phase kept unwrapped, radius stored as ln r.
struct PolarPoint {
    double phi = 0.0;
    double log_r = 0.0;
};

/// One classical RK4 step of size h from time t. When `max_log_rate` is given
/// it is raised to the largest d(ln r)/dt seen at any stage.
PolarPoint rk4_step(const PolarPoint& y, double t, double h, const GklsParams& p, double* max_log_rate = nullptr);

struct TrajectorySample {
    double t = 0.0;
    DensityState state;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    double dt = kDefaultStep;
    GklsParams params = GklsParams::constant(0.0, 1.0, 0.0);
    // Largest d(ln r)/dt over every RK4 stage; never positive for valid params.
    double max_log_radial_rate = -std::numeric_limits<double>::infinity();
};

/// Fixed-step RK4 from t0 to t1; the last step is shortened to land on t1.
/// t1 == t0 yields the single sample {s0}. Throws NumericError if r drops
/// below 1e-300.
Trajectory integrate(const DensityState& s0, const GklsParams& p, double t0, double t1, double dt = kDefaultStep);

/// alpha = 0 closed form: phi = phi0 - E dt, r = r0 exp(-beta dt).
DensityState evolve_without_anisotropy(const DensityState& s0, double energy, double beta, double dt);

/// Constant coefficients with E^2 > alpha^2 (rotating regime).
double analytic_phi_strong_drive(double phi0, double alpha, double energy, double dt);

enum class WeakDriveBranch {
    Coth,        // log argument of c2 positive, the textbook form
    Tanh,        // log argument negative: c2 shifted by i pi/2
    FixedPoint,  // phi0 is an equilibrium
};

WeakDriveBranch weak_drive_branch(double phi0, double alpha, double energy);

/// Constant coefficients with alpha^2 > E^2, E != 0 (relaxing regime).
double analytic_phi_weak_drive(double phi0, double alpha, double energy, double dt);

/// E = 0: tan 2phi(t) = tan 2phi0 exp(4 alpha dt).
double analytic_phi_separable(double phi0, double alpha, double dt);

struct ConstantPhiDrive {
    Coefficient energy;  // E(t) = alpha(t) sin 4phi_R freezes phi at phi_R
    Coefficient radius;  // r(t) along the resulting radial line
};

ConstantPhiDrive constant_phi_drive(double phi_ref, double r_ref, const GklsParams& p, double t0 = 0.0);

struct ConstantRates {
    double energy = 0.0;
    double beta = 0.0;
};

/// alpha = 0 parameters that carry `ref` at t_ref to `target` at t_target.
ConstantRates constant_rate_params(const DensityState& ref, const DensityState& target, double t_ref,
                                   double t_target);

/// Closed-system limit: rotation by the integrated energy.
DensityState closed_rotation_evolution(const DensityState& s, double energy_integral);

}  // namespace polcirc
