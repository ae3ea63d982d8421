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

// Trace distance on the state disk and the straight-line geodesics
// r = 1 / (C3 cos phi + C4 sin phi) used as reference circuits.

#include "polcirc/plane.hpp"

namespace polcirc {

/// Closed form 1/2 sqrt(r^2 + r'^2 - 2 r r' cos(2phi - 2phi')).
double trace_distance(const DensityState& s1, const DensityState& s2);

/// 1/2 sum |lambda_i| over the eigenvalues of rho1 - rho2.
double trace_distance_spectral(const DensityState& s1, const DensityState& s2);

/// 1/2 |xi - xi'| in Stokes coordinates.
double trace_distance_stokes(const DensityState& s1, const DensityState& s2);

/// Trace distance between two states of equal radius: r |sin(phi1 - phi2)|.
double equal_r_distance(double r, double phi1, double phi2);

class GeodesicSegment {
public:
    double c3() const { return c3_; }
    double c4() const { return c4_; }
    const DensityState& ref_state() const { return ref_; }
    const DensityState& target_state() const { return target_; }

    /// Endpoints collinear with the origin: the segment is a radial line and
    /// C3, C4 are not defined (reported as 0).
    bool radial() const { return radial_; }

    double r_min() const;
    double r_max() const;

private:
    friend GeodesicSegment geodesic_between(const DensityState&, const DensityState&);

    double c3_ = 0.0;
    double c4_ = 0.0;
    DensityState ref_;
    DensityState target_;
    bool radial_ = false;
};

/// Rejects zero radii and segments along which r is not strictly monotone.
GeodesicSegment geodesic_between(const DensityState& ref, const DensityState& target);

/// r (C3 cos phi + C4 sin phi) - 1; zero on the geodesic's line.
double line_residual(const GeodesicSegment& g, const DensityState& s);

/// The angle of the unique segment point at radius r.
double geodesic_phi_at_r(const GeodesicSegment& g, double r);

}  // namespace polcirc
