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

// Cross-module oracle suites behind `polcirc verify`. Each suite reduces to
// one worst-case residual that must stay strictly below its tolerance.

#include <fmt/format.h>
#include <gsl/gsl_fit.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "commands.hpp"
#include "polcirc/circuit.hpp"
#include "polcirc/geometry.hpp"
#include "polcirc/gkls.hpp"
#include "polcirc/polariser.hpp"

namespace polcirc::runner {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

double sign_draw(Rng& rng) { return uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0; }

DensityState random_state(Rng& rng) { return make_state(uniform(rng, 0.0, 1.0), uniform(rng, 0.0, kPi)); }

double phi_sup_error(const DensityState& s0, double alpha, double beta, double energy, double duration, double dt,
                     const std::function<double(double)>& analytic) {
    const Trajectory tr = integrate(s0, GklsParams::constant(alpha, beta, energy), 0.0, duration, dt);
    double worst = 0.0;
    for (const auto& smp : tr.samples)
        worst = std::max(worst, std::abs(angle_difference(smp.state.phi(), analytic(smp.t))));
    return worst;
}

// Both constant-coefficient closed forms against fine-step RK4.
double suite_analytic_vs_rk4(Rng& rng) {
    constexpr int kDraws = 50;
    constexpr double kStep = 1e-4;
    double worst = 0.0;
    for (int i = 0; i < kDraws; ++i) {
        const double energy = sign_draw(rng) * uniform(rng, 0.5, 10.0);
        const double alpha = energy * uniform(rng, -0.95, 0.95);
        const double beta = 2.0 * std::abs(alpha) + uniform(rng, 0.1, 2.0);
        const double phi0 = uniform(rng, 0.0, kPi);
        const double omega = std::sqrt(energy * energy - alpha * alpha);
        const double window = std::min(2.0 * kPi / omega, 4.0);
        worst = std::max(worst, phi_sup_error(make_state(1.0, phi0), alpha, beta, energy, window, kStep, [&](double t) {
                             return analytic_phi_strong_drive(phi0, alpha, energy, t);
                         }));
    }
    for (int i = 0; i < kDraws; ++i) {
        const double alpha = sign_draw(rng) * uniform(rng, 0.5, 5.0);
        const double energy = alpha * sign_draw(rng) * uniform(rng, 0.05, 0.95);
        const double beta = 2.0 * std::abs(alpha) + uniform(rng, 0.1, 2.0);
        const double phi0 = uniform(rng, 0.0, kPi);
        worst = std::max(worst, phi_sup_error(make_state(1.0, phi0), alpha, beta, energy, 2.0, kStep, [&](double t) {
                             return analytic_phi_weak_drive(phi0, alpha, energy, t);
                         }));
    }
    return worst;
}

// |e(h) / e(h/2) - 16| for the strong-drive phase at the end of a window.
double suite_rk4_convergence(Rng&) {
    constexpr double kAlpha = -9.0, kBeta = 20.0, kEnergy = 10.0, kWindow = 0.5;
    const double phi0 = kPi / 2;
    const double exact = analytic_phi_strong_drive(phi0, kAlpha, kEnergy, kWindow);
    auto error = [&](double h) {
        const Trajectory tr = integrate(make_state(1.0, phi0), GklsParams::constant(kAlpha, kBeta, kEnergy), 0.0,
                                        kWindow, h);
        return std::abs(angle_difference(tr.samples.back().state.phi(), exact));
    };
    return std::abs(error(0.01) / error(0.005) - 16.0);
}

std::pair<PolariserGate, DensityState> random_interaction(Rng& rng) {
    const PolariserGate g = PolariserGate::make(uniform(rng, 0.0, kPi), uniform(rng, -kPi, kPi),
                                                uniform(rng, -kPi, kPi), random_state(rng));
    return {g, random_state(rng)};
}

// Closed-form post-interaction states against the 4x4 partial traces.
double suite_partial_trace(Rng& rng) {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const auto [g, light] = random_interaction(rng);
        const JointState joint = joint_evolve(g, light);
        worst = std::max(worst, max_abs_diff(to_matrix(light_after(g, light)), trace_out_left(joint.matrix)));
        worst = std::max(worst, max_abs_diff(to_matrix(polariser_after(g, light)), trace_out_right(joint.matrix)));
    }
    return worst;
}

double suite_unitarity(Rng& rng) {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const Matrix4 u = evolution_operator(random_interaction(rng).first);
        worst = std::max(worst, max_abs_diff(u.transposed() * u, Matrix4::identity()));
        worst = std::max(worst, max_abs_diff(u * u.transposed(), Matrix4::identity()));
    }
    return worst;
}

// Pure light: Born weights equal cos^2 / sin^2 and the joint-state projector expectation.
double suite_malus(Rng& rng) {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double gamma = uniform(rng, 0.0, kPi);
        const DensityState light = make_state(1.0, uniform(rng, 0.0, kPi));
        const PolariserGate g = PolariserGate::make(gamma, kPi / 2, 0.0, random_state(rng));
        const BornProbabilities p = born_probabilities(light, gamma);
        const double c = std::cos(gamma - light.phi());
        const Matrix4 proj = kron(Matrix2::identity(), projector(gamma)) * joint_evolve(g, light).matrix;
        worst = std::max({worst, std::abs(p.parallel - c * c), std::abs(p.perpendicular - (1.0 - c * c)),
                          std::abs(proj.trace() - c * c)});
    }
    return worst;
}

double suite_metric_forms(Rng& rng) {
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        const DensityState a = random_state(rng), b = random_state(rng);
        const double d1 = trace_distance(a, b), d2 = trace_distance_spectral(a, b), d3 = trace_distance_stokes(a, b);
        worst = std::max({worst, std::abs(d1 - d2), std::abs(d1 - d3), std::abs(d2 - d3)});
    }
    return worst;
}

// Worst |log-log slope - 2| of the first-order gate/GKLS mismatch.
double suite_small_angle_scaling(Rng& rng) {
    constexpr int kPoints = 7;
    double worst = 0.0;
    int accepted = 0;
    while (accepted < 5) {
        const double gamma = uniform(rng, 0.0, kPi);
        const double phi0 = uniform(rng, 0.2, kPi - 0.2);
        const double s2 = std::pow(std::sin(2.0 * (gamma - phi0)), 2);
        // Keep clear of angles where the second-order radial term vanishes.
        if (s2 < 0.1 || std::abs(s2 - 0.5) < 0.15) continue;
        ++accepted;
        double x[kPoints], y[kPoints];
        for (int k = 0; k < kPoints; ++k) {
            const double delta = std::pow(10.0, -6.0 + 3.0 * k / (kPoints - 1));
            const InfinitesimalCheck c = infinitesimal_consistency(gamma, phi0, delta);
            x[k] = std::log10(delta);
            y[k] = std::log10(std::hypot(c.r_error, c.phi_error));
        }
        double c0, c1, cov00, cov01, cov11, sumsq;
        gsl_fit_linear(x, 1, y, 1, kPoints, &c0, &c1, &cov00, &cov01, &cov11, &sumsq);
        worst = std::max(worst, std::abs(c1 - 2.0));
    }
    return worst;
}

double suite_geodesic_endpoints(Rng&) {
    double worst = 0.0;
    for (char ex : {'a', 'b', 'c', 'd'}) {
        const CircuitConfig cfg = reference_configuration(ex);
        const GeodesicSegment g = geodesic_between(cfg.ref_state, cfg.target_state);
        worst = std::max({worst, std::abs(line_residual(g, cfg.ref_state)), std::abs(line_residual(g, cfg.target_state))});
        for (const DensityState& s : {cfg.ref_state, cfg.target_state})
            worst = std::max(worst, std::abs(angle_difference(geodesic_phi_at_r(g, s.r()), s.phi())));
    }
    return worst;
}

using Suite = double (*)(Rng&);

const std::vector<std::pair<std::string, Suite>>& suite_table() {
    static const std::vector<std::pair<std::string, Suite>> table = {
        {"analytic_vs_rk4", suite_analytic_vs_rk4},
        {"rk4_convergence", suite_rk4_convergence},
        {"partial_trace", suite_partial_trace},
        {"unitarity", suite_unitarity},
        {"malus", suite_malus},
        {"metric_forms", suite_metric_forms},
        {"small_angle_scaling", suite_small_angle_scaling},
        {"geodesic_endpoints", suite_geodesic_endpoints},
    };
    return table;
}

}  // namespace

const std::vector<std::pair<std::string, double>>& verify_suites() {
    static const std::vector<std::pair<std::string, double>> suites = {
        {"analytic_vs_rk4", 1e-6}, {"rk4_convergence", 3.0}, {"partial_trace", 1e-12},
        {"unitarity", 1e-12},      {"malus", 1e-12},         {"metric_forms", 1e-12},
        {"small_angle_scaling", 0.1}, {"geodesic_endpoints", 1e-10},
    };
    return suites;
}

std::vector<SuiteResult> run_verify_suites(std::uint64_t seed, const std::map<std::string, double>& overrides) {
    for (const auto& [name, tol] : overrides) {
        const auto& s = verify_suites();
        if (std::none_of(s.begin(), s.end(), [&](const auto& e) { return e.first == name; }))
            throw UsageError("unknown verify suite '" + name + "'");
        if (!(tol >= 0.0)) throw UsageError("tolerance for '" + name + "' must be non-negative");
    }
    std::vector<SuiteResult> out;
    for (std::size_t i = 0; i < suite_table().size(); ++i) {
        const auto& [name, fn] = suite_table()[i];
        // Independent stream per suite so adding a suite never shifts the others.
        Rng rng(seed * 0x9E3779B97F4A7C15ULL + i);
        const double residual = fn(rng);
        const auto it = overrides.find(name);
        const double tol = it != overrides.end() ? it->second : verify_suites()[i].second;
        out.push_back({name, residual, tol, std::isfinite(residual) && residual < tol});
    }
    return out;
}

std::string format_verify_report(std::uint64_t seed, const std::vector<SuiteResult>& results) {
    std::string out = fmt::format("# polcirc verify seed={}\n", seed);
    std::size_t failed = 0;
    for (const auto& r : results) {
        out += fmt::format("[{}] {:<20} max_residual={:.6e} tolerance={:.3e}\n", r.passed ? "PASS" : "FAIL", r.name,
                           r.residual, r.tolerance);
        failed += !r.passed;
    }
    out += fmt::format("{} of {} suites passed\n", results.size() - failed, results.size());
    return out;
}

}  // namespace polcirc::runner
