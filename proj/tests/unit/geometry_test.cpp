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

#include <cmath>

#include "polcirc/circuit.hpp"
#include "polcirc/error.hpp"
#include "polcirc/geometry.hpp"
#include "support.hpp"

namespace polcirc {
namespace {

using testing::Draws;
using testing::to_eigen;

TEST(TraceDistance, ReferenceCases) {
    const DensityState s = make_state(0.6, 1.1);
    EXPECT_EQ(trace_distance(s, s), 0.0);
    EXPECT_NEAR(trace_distance(make_state(1, 0), make_state(1, kPi / 2)), 1.0, 1e-15);
}

TEST(TraceDistance, ThreeFormsAgreeWithEigenOracle) {
    Draws d(71);
    for (int i = 0; i < 500; ++i) {
        const DensityState a = d.state(), b = d.state();
        const double closed = trace_distance(a, b);
        const double oracle = testing::trace_norm_half(to_eigen(to_matrix(a)) - to_eigen(to_matrix(b)));
        EXPECT_NEAR(closed, oracle, 1e-12);
        EXPECT_NEAR(closed, trace_distance_spectral(a, b), 1e-12);
        EXPECT_NEAR(closed, trace_distance_stokes(a, b), 1e-12);
        EXPECT_GE(closed, 0.0);
        EXPECT_LE(closed, 1.0);
    }
}

TEST(TraceDistance, MetricAxioms) {
    Draws d(72);
    for (int i = 0; i < 500; ++i) {
        const DensityState a = d.state(), b = d.state(), c = d.state();
        EXPECT_EQ(trace_distance(a, b), trace_distance(b, a));
        EXPECT_LE(trace_distance(a, c), trace_distance(a, b) + trace_distance(b, c) + 1e-12);
        EXPECT_EQ(trace_distance(a, make_state(a.r(), a.phi() + kPi)), 0.0);
    }
}

TEST(EqualRadiusDistance, ReferenceCasesAndAgreement) {
    EXPECT_EQ(equal_r_distance(0.7, 0.4, 0.4), 0.0);
    EXPECT_NEAR(equal_r_distance(1.0, 0.0, kPi / 2), 1.0, 1e-15);
    EXPECT_DOUBLE_EQ(equal_r_distance(0.8, 0.3, 0.2), 0.8 * std::sin(0.1));
    Draws d(73);
    for (int i = 0; i < 500; ++i) {
        const double r = d.uniform(0, 1), p1 = d.uniform(0, kPi), p2 = d.uniform(0, kPi);
        EXPECT_NEAR(equal_r_distance(r, p1, p2), trace_distance(make_state(r, p1), make_state(r, p2)), 1e-14);
    }
}

TEST(Geodesic, CoefficientsForFirstReferencePair) {
    const GeodesicSegment g = geodesic_between(make_state(1.0, 0.0), make_state(0.5, kPi / 6));
    EXPECT_FALSE(g.radial());
    EXPECT_NEAR(g.c3(), 1.0, 1e-14);
    EXPECT_NEAR(g.c4(), (1 - 0.5 * std::cos(kPi / 6)) / 0.25, 1e-13);
    EXPECT_NEAR(g.c4(), 2.26795, 1e-5);
    EXPECT_NEAR(1.0 / (g.c3() * std::cos(0.0) + g.c4() * std::sin(0.0)), 1.0, 1e-14);
    EXPECT_NEAR(1.0 / (g.c3() * std::cos(kPi / 6) + g.c4() * std::sin(kPi / 6)), 0.5, 1e-14);
}

TEST(Geodesic, EndpointsOnLineForAllReferencePairs) {
    for (char ex : {'a', 'b', 'c', 'd'}) {
        const CircuitConfig cfg = reference_configuration(ex);
        const GeodesicSegment g = geodesic_between(cfg.ref_state, cfg.target_state);
        EXPECT_LT(std::abs(line_residual(g, cfg.ref_state)), 1e-10) << ex;
        EXPECT_LT(std::abs(line_residual(g, cfg.target_state)), 1e-10) << ex;
        EXPECT_EQ(g.r_min(), 0.5);
        EXPECT_EQ(g.r_max(), 1.0);
    }
}

TEST(Geodesic, CollinearEndpointsGiveRadialSegment) {
    const GeodesicSegment g = geodesic_between(make_state(1.0, 0.4), make_state(0.5, 0.4));
    EXPECT_TRUE(g.radial());
    EXPECT_EQ(geodesic_phi_at_r(g, 0.7), 0.4);
    // Antipodal angles are the same ray on the pi-circle.
    EXPECT_TRUE(geodesic_between(make_state(1.0, 0.0), make_state(0.5, kPi - 1e-14)).radial());
}

TEST(Geodesic, RejectsDegenerateSegments) {
    EXPECT_THROW(geodesic_between(make_state(0.0, 0.0), make_state(0.5, 1.0)), ValidationError);
    EXPECT_THROW(geodesic_between(make_state(0.5, 0.3), make_state(0.5, 0.3)), ValidationError);
    // The chord dips below both endpoint radii.
    EXPECT_THROW(geodesic_between(make_state(1.0, 0.0), make_state(1.0, 1.0)), ValidationError);
    EXPECT_THROW(geodesic_between(make_state(1.0, 0.0), make_state(0.9, 1.2)), ValidationError);
}

TEST(Geodesic, SatisfiesEulerLagrangeSystem) {
    // A straight line r(phi) obeys r'' - 2 r'^2 / r - r = 0; checked with a
    // five-point stencil at h = 1e-3.
    for (char ex : {'a', 'b', 'c', 'd'}) {
        const CircuitConfig cfg = reference_configuration(ex);
        const GeodesicSegment g = geodesic_between(cfg.ref_state, cfg.target_state);
        auto r = [&](double phi) { return 1.0 / (g.c3() * std::cos(phi) + g.c4() * std::sin(phi)); };
        const double lo = std::min(cfg.ref_state.phi(), cfg.target_state.phi());
        const double hi = std::max(cfg.ref_state.phi(), cfg.target_state.phi());
        constexpr double h = 1e-3;
        for (int k = 1; k < 10; ++k) {
            const double phi = lo + (hi - lo) * k / 10.0;
            const double d1 = (-r(phi + 2 * h) + 8 * r(phi + h) - 8 * r(phi - h) + r(phi - 2 * h)) / (12 * h);
            const double d2 =
                (-r(phi + 2 * h) + 16 * r(phi + h) - 30 * r(phi) + 16 * r(phi - h) - r(phi - 2 * h)) / (12 * h * h);
            EXPECT_LT(std::abs(d2 - 2 * d1 * d1 / r(phi) - r(phi)), 1e-8) << ex << " phi=" << phi;
        }
    }
}

TEST(GeodesicPhiAtR, EndpointsAndInteriorResidual) {
    const GeodesicSegment g = geodesic_between(make_state(1.0, 0.0), make_state(0.5, kPi / 6));
    EXPECT_NEAR(geodesic_phi_at_r(g, 1.0), 0.0, 1e-12);
    EXPECT_NEAR(geodesic_phi_at_r(g, 0.5), kPi / 6, 1e-12);
    const double phi = geodesic_phi_at_r(g, 0.75);
    EXPECT_LT(std::abs(line_residual(g, make_state(0.75, phi))), 1e-10);
    EXPECT_GT(phi, 0.0);
    EXPECT_LT(phi, kPi / 6);
}

TEST(GeodesicPhiAtR, RoundTripOnRandomRadii) {
    Draws d(74);
    for (char ex : {'a', 'b', 'c', 'd'}) {
        const CircuitConfig cfg = reference_configuration(ex);
        const GeodesicSegment g = geodesic_between(cfg.ref_state, cfg.target_state);
        for (int i = 0; i < 100; ++i) {
            const double r = d.uniform(0.5, 1.0);
            const double phi = geodesic_phi_at_r(g, r);
            // Distance from (r cos phi, r sin phi) to the line C3 x + C4 y = 1.
            const double dist = std::abs(g.c3() * r * std::cos(phi) + g.c4() * r * std::sin(phi) - 1.0) /
                                std::hypot(g.c3(), g.c4());
            EXPECT_LT(dist, 1e-10) << ex << " r=" << r;
        }
    }
}

TEST(GeodesicPhiAtR, MonotoneAlongSegment) {
    const GeodesicSegment g = geodesic_between(make_state(1.0, kPi / 4), make_state(0.5, kPi / 12));
    double prev = geodesic_phi_at_r(g, 1.0);
    for (int k = 1; k <= 100; ++k) {
        const double phi = geodesic_phi_at_r(g, 1.0 - 0.005 * k);
        EXPECT_LT(phi, prev);
        prev = phi;
    }
}

TEST(GeodesicPhiAtR, RejectsRadiiOutsideSegment) {
    const GeodesicSegment g = geodesic_between(make_state(1.0, 0.0), make_state(0.5, kPi / 6));
    EXPECT_THROW(geodesic_phi_at_r(g, 0.49), ValidationError);
    EXPECT_NO_THROW(geodesic_phi_at_r(g, 0.5 - 1e-13));
    EXPECT_THROW(geodesic_phi_at_r(g, std::nan("")), ValidationError);
}

}  // namespace
}  // namespace polcirc
