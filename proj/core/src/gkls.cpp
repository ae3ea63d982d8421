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

#include "polcirc/gkls.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <string>

#include "polcirc/error.hpp"

namespace polcirc {

namespace {

constexpr double kParamSlack = 1e-12;
const double kLogUnderflow = std::log(1e-300);

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) throw ValidationError(std::string(what) + " must be finite");
}

double sign(double x) { return x < 0.0 ? -1.0 : 1.0; }

struct Derivative {
    double phi = 0.0;
    double log_r = 0.0;
};

Derivative field(double t, double phi, const GklsParams& p) {
    p.validate_at(t);
    const double a = p.alpha(t);
    return {a * std::sin(4.0 * phi) - p.energy(t), -2.0 * a * std::cos(4.0 * phi) - p.beta(t)};
}

DensityState to_state(const PolarPoint& y) {
    return DensityState::make(std::min(1.0, std::exp(y.log_r)), y.phi);
}

// Continuous lift of 2phi from its principal tangent value: picks n so that
// principal + n pi is the member of the mod-pi class closest to `lifted`.
double phi_from_branch(double principal, double lifted) {
    const double n = std::round((lifted - principal) / kPi);
    return canonical_angle(0.5 * (principal + n * kPi));
}

}  // namespace

GklsParams GklsParams::constant(double alpha, double beta, double energy) {
    require_finite(alpha, "alpha");
    require_finite(beta, "beta");
    require_finite(energy, "energy");
    GklsParams p([alpha](double) { return alpha; }, [beta](double) { return beta; },
                 [energy](double) { return energy; }, ConstantCoefficients{alpha, beta, energy});
    p.validate_at(0.0);
    return p;
}

GklsParams GklsParams::time_dependent(Coefficient alpha, Coefficient beta, Coefficient energy) {
    if (!alpha || !beta || !energy) throw ValidationError("coefficient functions must be callable");
    return GklsParams(std::move(alpha), std::move(beta), std::move(energy), std::nullopt);
}

void GklsParams::validate_at(double t) const {
    const double a = alpha(t), b = beta(t), e = energy(t);
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(e))
        throw ValidationError("GKLS coefficients must be finite at t=" + std::to_string(t));
    if (!(b > 0.0)) throw ValidationError("beta must be positive at t=" + std::to_string(t));
    if (std::abs(2.0 * a) > b * (1.0 + kParamSlack))
        throw ValidationError("|2 alpha| must not exceed beta (negative decay rate) at t=" + std::to_string(t));
}

GklsParams GklsParams::with_energy(Coefficient energy) const {
    return GklsParams(alpha_, beta_, std::move(energy), std::nullopt);
}

Rates gkls_rhs(const DensityState& s, double t, const GklsParams& p) {
    const Derivative d = field(t, s.phi(), p);
    return {d.phi, s.r() * d.log_r};
}

PolarPoint rk4_step(const PolarPoint& y, double t, double h, const GklsParams& p, double* max_log_rate) {
    // The radial equation is linear in ln r, so only phi feeds the stages.
    const Derivative k1 = field(t, y.phi, p);
    const Derivative k2 = field(t + 0.5 * h, y.phi + 0.5 * h * k1.phi, p);
    const Derivative k3 = field(t + 0.5 * h, y.phi + 0.5 * h * k2.phi, p);
    const Derivative k4 = field(t + h, y.phi + h * k3.phi, p);
    if (max_log_rate) {
        *max_log_rate = std::max({*max_log_rate, k1.log_r, k2.log_r, k3.log_r, k4.log_r});
    }
    return {y.phi + h / 6.0 * (k1.phi + 2.0 * k2.phi + 2.0 * k3.phi + k4.phi),
            y.log_r + h / 6.0 * (k1.log_r + 2.0 * k2.log_r + 2.0 * k3.log_r + k4.log_r)};
}

Trajectory integrate(const DensityState& s0, const GklsParams& p, double t0, double t1, double dt) {
    require_finite(t0, "t0");
    require_finite(t1, "t1");
    require_finite(dt, "dt");
    if (t1 < t0) throw ValidationError("integration end time precedes start time");
    if (!(dt > 0.0)) throw ValidationError("step size must be positive");

    Trajectory traj;
    traj.dt = dt;
    traj.params = p;
    traj.samples.push_back({t0, s0});
    if (t1 == t0) return traj;

    const bool at_origin = s0.r() == 0.0;
    PolarPoint y{s0.phi(), at_origin ? -std::numeric_limits<double>::infinity() : std::log(s0.r())};
    double t = t0;
    for (std::size_t k = 1;; ++k) {
        double next = t0 + static_cast<double>(k) * dt;
        const bool last = next >= t1 - 1e-9 * dt;
        if (last) next = t1;
        y = rk4_step(y, t, next - t, p, &traj.max_log_radial_rate);
        if (!at_origin && y.log_r < kLogUnderflow)
            throw NumericError("radius underflowed below 1e-300 at t=" + std::to_string(next));
        traj.samples.push_back({next, to_state(y)});
        t = next;
        if (last) break;
    }
    return traj;
}

DensityState evolve_without_anisotropy(const DensityState& s0, double energy, double beta, double dt) {
    return DensityState::make(s0.r() * std::exp(-beta * dt), s0.phi() - energy * dt);
}

double analytic_phi_strong_drive(double phi0, double alpha, double energy, double dt) {
    require_finite(phi0, "phi0");
    require_finite(alpha, "alpha");
    require_finite(energy, "energy");
    require_finite(dt, "dt");
    if (energy * energy <= alpha * alpha) throw ValidationError("strong-drive solution needs E^2 > alpha^2");
    if (dt == 0.0) return canonical_angle(phi0);

    const double omega = std::sqrt(energy * energy - alpha * alpha);
    const double c0 = std::atan((-energy * std::tan(2.0 * phi0) + alpha) / omega);
    const double theta = 2.0 * omega * dt + c0;
    const double principal = std::atan(-omega / energy * std::tan(theta) + alpha / energy);

    // tan 2phi = y/x for the point (x, y) = (E cos th, alpha cos th - omega sin th),
    // a linear image of the unit circle. Its argument turns by -sign(E) pi per
    // half-turn of th, which fixes the branch integer n.
    const double orientation = -sign(energy);
    const double half_turns = std::floor((theta - c0) / kPi);
    const double rem = theta - half_turns * kPi;
    auto point = [&](double th) {
        return std::pair{energy * std::cos(th), alpha * std::cos(th) - omega * std::sin(th)};
    };
    const auto [x0, y0] = point(c0);
    const auto [x1, y1] = point(rem);
    double turn = std::atan2(x0 * y1 - y0 * x1, x0 * x1 + y0 * y1);
    if (turn * orientation < 0.0 && std::abs(turn) > kPi / 2) turn += orientation * 2.0 * kPi;
    const double lifted = 2.0 * phi0 + orientation * half_turns * kPi + turn;
    return phi_from_branch(principal, lifted);
}

WeakDriveBranch weak_drive_branch(double phi0, double alpha, double energy) {
    const double gamma = std::sqrt(alpha * alpha - energy * energy);
    const double x = -energy * std::tan(2.0 * phi0) + alpha;
    const double num = x - gamma, den = x + gamma;
    if (num == 0.0 || den == 0.0) return WeakDriveBranch::FixedPoint;
    return num / den > 0.0 ? WeakDriveBranch::Coth : WeakDriveBranch::Tanh;
}

double analytic_phi_weak_drive(double phi0, double alpha, double energy, double dt) {
    require_finite(phi0, "phi0");
    require_finite(alpha, "alpha");
    require_finite(energy, "energy");
    require_finite(dt, "dt");
    if (alpha * alpha <= energy * energy) throw ValidationError("weak-drive solution needs alpha^2 > E^2");
    if (energy == 0.0) throw ValidationError("weak-drive solution is singular at E = 0; use analytic_phi_separable");

    const WeakDriveBranch branch = weak_drive_branch(phi0, alpha, energy);
    if (dt == 0.0 || branch == WeakDriveBranch::FixedPoint) return canonical_angle(phi0);

    const double gamma = std::sqrt(alpha * alpha - energy * energy);
    const double x = -energy * std::tan(2.0 * phi0) + alpha;
    const double c2 = 0.5 * std::log(std::abs((x - gamma) / (x + gamma)));
    const double arg = 2.0 * gamma * dt + c2;
    const double f = branch == WeakDriveBranch::Coth ? 1.0 / std::tanh(arg) : std::tanh(arg);
    const double principal = std::atan(alpha / energy + gamma / energy * f);

    // 2phi moves monotonically towards the next equilibrium, less than pi away.
    const double psi0 = 2.0 * phi0;
    const double direction = sign(2.0 * alpha * std::sin(2.0 * psi0) - 2.0 * energy);
    double d = std::remainder(principal - psi0, kPi);
    if (d * direction < 0.0 && std::abs(d) > 1e-9) d += direction * kPi;
    return phi_from_branch(principal, psi0 + d);
}

double analytic_phi_separable(double phi0, double alpha, double dt) {
    require_finite(phi0, "phi0");
    require_finite(alpha, "alpha");
    require_finite(dt, "dt");
    const double psi0 = 2.0 * phi0;
    const double principal = std::atan(std::tan(psi0) * std::exp(4.0 * alpha * dt));
    // 2phi never crosses a multiple of pi/2 (the equilibria).
    return phi_from_branch(principal, psi0 + std::remainder(principal - psi0, kPi));
}

ConstantPhiDrive constant_phi_drive(double phi_ref, double r_ref, const GklsParams& p, double t0) {
    require_finite(phi_ref, "phi_ref");
    require_finite(t0, "t0");
    if (!(r_ref >= 0.0 && r_ref <= 1.0)) throw ValidationError("r_ref must lie in [0, 1]");
    const double s4 = std::sin(4.0 * phi_ref);
    const double c4 = std::cos(4.0 * phi_ref);

    ConstantPhiDrive drive;
    drive.energy = [p, s4](double t) { return p.alpha(t) * s4; };
    if (const auto& c = p.constants()) {
        const double rate = 2.0 * c->alpha * c4 + c->beta;
        drive.radius = [r_ref, rate, t0](double t) { return r_ref * std::exp(-rate * (t - t0)); };
    } else {
        drive.radius = [p, r_ref, c4, t0](double t) {
            if (t == t0) return r_ref;
            auto rate = [&](double s) { return 2.0 * p.alpha(s) * c4 + p.beta(s); };
            const double integral = boost::math::quadrature::gauss_kronrod<double, 21>::integrate(rate, t0, t, 15, 1e-13);
            return r_ref * std::exp(-integral);
        };
    }
    return drive;
}

ConstantRates constant_rate_params(const DensityState& ref, const DensityState& target, double t_ref,
                                   double t_target) {
    require_finite(t_ref, "t_ref");
    require_finite(t_target, "t_target");
    if (!(t_target > t_ref)) throw ValidationError("target time must follow reference time");
    if (target.r() == 0.0) throw ValidationError("target radius must be positive");
    if (target.r() >= ref.r())
        throw ValidationError("target radius must be strictly smaller than reference radius (beta > 0)");
    const double span = t_target - t_ref;
    return {angle_difference(ref.phi(), target.phi()) / span, std::log(ref.r() / target.r()) / span};
}

DensityState closed_rotation_evolution(const DensityState& s, double energy_integral) {
    return rotate_state(s, energy_integral);
}

}  // namespace polcirc
