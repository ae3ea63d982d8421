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

#include <gtest/gtest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

#include "polcirc/error.hpp"
#include "polcirc/gkls.hpp"
#include "support.hpp"

namespace polcirc {
namespace {

using testing::Draws;

// Phase of the exact Lindblad flow; the dissipators only scale the radius, so
// beta is irrelevant and fixed at its smallest admissible value.
double exact_phi(double phi0, double alpha, double energy, double dt) {
    const double beta = 2 * std::abs(alpha);
    Eigen::Matrix2d gen;
    gen << -(beta + 2 * alpha), 2 * energy, -2 * energy, -(beta - 2 * alpha);
    const Eigen::Vector2d xi = (gen * dt).exp() * Eigen::Vector2d(std::cos(2 * phi0), std::sin(2 * phi0));
    return canonical_angle(0.5 * std::atan2(xi(1), xi(0)));
}

double rk4_sup_error(double phi0, double alpha, double energy, double window, double dt,
                     double (*analytic)(double, double, double, double)) {
    const double beta = 2 * std::abs(alpha) + 0.5;
    const Trajectory tr = integrate(make_state(1.0, phi0), GklsParams::constant(alpha, beta, energy), 0.0, window, dt);
    double worst = 0.0;
    for (const auto& s : tr.samples)
        worst = std::max(worst, std::abs(angle_difference(s.state.phi(), analytic(phi0, alpha, energy, s.t))));
    return worst;
}

TEST(StrongDrive, InitialCondition) {
    EXPECT_NEAR(analytic_phi_strong_drive(1.1, 2.0, 5.0, 0.0), 1.1, 1e-15);
    EXPECT_NEAR(analytic_phi_strong_drive(4.0, -2.0, 5.0, 0.0), canonical_angle(4.0), 1e-15);
}

TEST(StrongDrive, RejectsWeakRegime) {
    EXPECT_THROW(analytic_phi_strong_drive(0.1, 2.0, 1.0, 0.3), ValidationError);
    EXPECT_THROW(analytic_phi_strong_drive(0.1, 2.0, 2.0, 0.3), ValidationError);
}

TEST(StrongDrive, MatchesRk4ForPresetTrajectories) {
    for (double alpha : {-9.0, 0.5}) {
        const double omega = std::sqrt(100.0 - alpha * alpha);
        EXPECT_LT(rk4_sup_error(kPi / 2, alpha, 10.0, kPi / omega, 1e-4, analytic_phi_strong_drive), 1e-6) << alpha;
    }
}

TEST(StrongDrive, MatchesRk4OnRandomDraws) {
    Draws d(21);
    for (int i = 0; i < 50; ++i) {
        const double energy = d.sign() * d.uniform(0.5, 10.0);
        const double alpha = energy * d.uniform(-0.95, 0.95);
        const double omega = std::sqrt(energy * energy - alpha * alpha);
        const double phi0 = d.uniform(0, kPi);
        EXPECT_LT(rk4_sup_error(phi0, alpha, energy, std::min(2 * kPi / omega, 4.0), 1e-4, analytic_phi_strong_drive),
                  1e-6)
            << "E=" << energy << " alpha=" << alpha << " phi0=" << phi0;
    }
}

TEST(StrongDrive, MatchesExactFlowOverManyCycles) {
    Draws d(22);
    for (int i = 0; i < 50; ++i) {
        const double energy = d.sign() * d.uniform(0.2, 8.0);
        const double alpha = energy * d.uniform(-0.99, 0.99);
        const double phi0 = d.uniform(0, kPi);
        for (int k = 0; k <= 200; ++k) {
            const double t = 0.05 * k;
            EXPECT_NEAR(angle_difference(analytic_phi_strong_drive(phi0, alpha, energy, t),
                                         exact_phi(phi0, alpha, energy, t)),
                        0.0, 1e-9);
        }
    }
}

TEST(StrongDrive, HalfTurnAfterQuarterPeriodAndFullTurnAfterHalf) {
    // One sweep of the angle-doubling cycle takes pi/(2 omega) and moves phi by
    // pi/2; the phi-cycle on the pi-circle therefore closes after pi/omega.
    Draws d(23);
    for (int i = 0; i < 50; ++i) {
        const double energy = d.sign() * d.uniform(0.5, 10.0);
        const double alpha = energy * d.uniform(-0.9, 0.9);
        const double omega = std::sqrt(energy * energy - alpha * alpha);
        const double quarter = kPi / (2 * omega);
        const double phi0 = d.uniform(0, kPi), t = d.uniform(0, 3);
        const double p0 = analytic_phi_strong_drive(phi0, alpha, energy, t);
        const double p1 = analytic_phi_strong_drive(phi0, alpha, energy, t + quarter);
        const double p2 = analytic_phi_strong_drive(phi0, alpha, energy, t + 2 * quarter);
        EXPECT_NEAR(std::abs(angle_difference(p1, p0)), kPi / 2, 1e-8);
        EXPECT_NEAR(angle_difference(p2, p0), 0.0, 1e-8);
    }
}

TEST(Rk4, FourthOrderConvergence) {
    const double alpha = -9.0, energy = 10.0, window = 0.5, phi0 = kPi / 2;
    const double exact = analytic_phi_strong_drive(phi0, alpha, energy, window);
    auto err = [&](double h) {
        const Trajectory tr =
            integrate(make_state(1.0, phi0), GklsParams::constant(alpha, 20.0, energy), 0.0, window, h);
        return std::abs(angle_difference(tr.samples.back().state.phi(), exact));
    };
    for (double h : {0.01, 0.005}) EXPECT_NEAR(err(h) / err(h / 2), 16.0, 3.0) << h;

    // The radius carries the same order.
    const DensityState s0 = make_state(1.0, 0.3);
    auto rerr = [&](double h) {
        const GklsParams p = GklsParams::constant(0.5, 3.0, 10.0);
        return std::abs(integrate(s0, p, 0.0, 1.0, h).samples.back().state.r() -
                        integrate(s0, p, 0.0, 1.0, 1e-5).samples.back().state.r());
    };
    EXPECT_NEAR(rerr(0.005) / rerr(0.0025), 16.0, 3.0);
}

TEST(WeakDrive, InitialConditionAndRejections) {
    EXPECT_NEAR(analytic_phi_weak_drive(0.3, 2.0, 1.0, 0.0), 0.3, 1e-15);
    EXPECT_THROW(analytic_phi_weak_drive(0.3, 1.0, 2.0, 0.5), ValidationError);
    EXPECT_THROW(analytic_phi_weak_drive(0.3, 1.0, 0.0, 0.5), ValidationError);
}

TEST(WeakDrive, MatchesRk4OnReferenceCase) {
    EXPECT_LT(rk4_sup_error(0.3, 2.0, 1.0, 3.0, 1e-4, analytic_phi_weak_drive), 1e-6);
}

TEST(WeakDrive, ConvergesToReachableAttractor) {
    // alpha sin 4phi = E with alpha = 2, E = 1; the stable root above phi0 = 0.3 is 5 pi / 24.
    EXPECT_NEAR(analytic_phi_weak_drive(0.3, 2.0, 1.0, 20.0), 5 * kPi / 24, 1e-10);
    EXPECT_NEAR(2.0 * std::sin(4 * 5 * kPi / 24), 1.0, 1e-14);
}

TEST(WeakDrive, BothBranchesMatchRk4OnRandomDraws) {
    Draws d(31);
    int coth = 0, tanh = 0;
    for (int i = 0; i < 50; ++i) {
        const double alpha = d.sign() * d.uniform(0.5, 5.0);
        const double energy = alpha * d.sign() * d.uniform(0.05, 0.95);
        const double phi0 = d.uniform(0, kPi);
        (weak_drive_branch(phi0, alpha, energy) == WeakDriveBranch::Coth ? coth : tanh)++;
        EXPECT_LT(rk4_sup_error(phi0, alpha, energy, 2.0, 1e-4, analytic_phi_weak_drive), 1e-6)
            << "alpha=" << alpha << " E=" << energy << " phi0=" << phi0;
    }
    EXPECT_GT(coth, 0);
    EXPECT_GT(tanh, 0);
}

TEST(WeakDrive, MatchesExactFlowOnDenseGrid) {
    Draws d(32);
    for (int i = 0; i < 50; ++i) {
        const double alpha = d.sign() * d.uniform(0.2, 5.0);
        const double energy = alpha * d.sign() * d.uniform(0.01, 0.99);
        const double phi0 = d.uniform(0, kPi);
        for (int k = 0; k <= 100; ++k) {
            const double t = 0.03 * k;
            EXPECT_NEAR(angle_difference(analytic_phi_weak_drive(phi0, alpha, energy, t),
                                         exact_phi(phi0, alpha, energy, t)),
                        0.0, 1e-8);
        }
    }
}

TEST(WeakDrive, EquilibriumIsFixed) {
    const double alpha = 2.0, energy = 1.0;
    const double eq = 5 * kPi / 24;
    EXPECT_EQ(weak_drive_branch(eq, alpha, energy) == WeakDriveBranch::FixedPoint ||
                  std::abs(angle_difference(analytic_phi_weak_drive(eq, alpha, energy, 3.0), eq)) < 1e-9,
              true);
}

TEST(Separable, MatchesExactFlow) {
    Draws d(41);
    for (int i = 0; i < 50; ++i) {
        const double alpha = d.sign() * d.uniform(0.1, 4.0);
        const double phi0 = d.uniform(0, kPi);
        for (int k = 0; k <= 50; ++k) {
            const double t = 0.04 * k;
            EXPECT_NEAR(angle_difference(analytic_phi_separable(phi0, alpha, t), exact_phi(phi0, alpha, 0.0, t)),
                        0.0, 1e-9);
        }
    }
}

}  // namespace
}  // namespace polcirc
