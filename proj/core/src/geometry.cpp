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

#include "polcirc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polcirc/error.hpp"

namespace polcirc {

namespace {

constexpr double kCollinear = 1e-12;
constexpr double kRadiusSlack = 1e-12;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

Point cartesian(const DensityState& s) { return {s.r() * std::cos(s.phi()), s.r() * std::sin(s.phi())}; }

double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }

}  // namespace

double trace_distance(const DensityState& s1, const DensityState& s2) {
    const double r = s1.r(), rp = s2.r();
    const double sq = r * r + rp * rp - 2.0 * r * rp * std::cos(2.0 * s1.phi() - 2.0 * s2.phi());
    return 0.5 * std::sqrt(std::max(0.0, sq));
}

double trace_distance_spectral(const DensityState& s1, const DensityState& s2) {
    const Matrix2 d = to_matrix(s1) - to_matrix(s2);
    const double mean = 0.5 * (d(0, 0) + d(1, 1));
    const double radius = std::hypot(0.5 * (d(0, 0) - d(1, 1)), 0.5 * (d(0, 1) + d(1, 0)));
    return 0.5 * (std::abs(mean + radius) + std::abs(mean - radius));
}

double trace_distance_stokes(const DensityState& s1, const DensityState& s2) {
    const StokesVector a = to_stokes(s1), b = to_stokes(s2);
    return 0.5 * std::hypot(a.xi1 - b.xi1, a.xi3 - b.xi3);
}

double equal_r_distance(double r, double phi1, double phi2) { return r * std::abs(std::sin(phi1 - phi2)); }

double GeodesicSegment::r_min() const { return std::min(ref_.r(), target_.r()); }
double GeodesicSegment::r_max() const { return std::max(ref_.r(), target_.r()); }

GeodesicSegment geodesic_between(const DensityState& ref, const DensityState& target) {
    if (ref.r() == 0.0 || target.r() == 0.0) throw ValidationError("geodesic endpoints must have positive radius");

    GeodesicSegment g;
    g.ref_ = ref;
    g.target_ = target;

    const double rr = ref.r(), pr = ref.phi(), rt = target.r(), pt = target.phi();
    const double s = std::sin(pt - pr);
    if (std::abs(s) < kCollinear) {
        if (rr == rt) throw ValidationError("geodesic endpoints coincide");
        g.radial_ = true;
        return g;
    }
    const double denom = rt * rr * s;
    g.c3_ = (rt * std::sin(pt) - rr * std::sin(pr)) / denom;
    g.c4_ = (-rt * std::cos(pt) + rr * std::cos(pr)) / denom;

    // d|P(s)|^2/ds is linear along the chord, so checking both ends suffices.
    const Point a = cartesian(ref), b = cartesian(target);
    const Point d{b.x - a.x, b.y - a.y};
    const double start = dot(a, d), end = dot(b, d);
    if (start == 0.0 || end == 0.0 || (start < 0.0) != (end < 0.0))
        throw ValidationError("radius is not strictly monotone along the geodesic segment");
    return g;
}

double line_residual(const GeodesicSegment& g, const DensityState& s) {
    if (g.radial()) return angle_difference(s.phi(), g.ref_state().phi());
    return s.r() * (g.c3() * std::cos(s.phi()) + g.c4() * std::sin(s.phi())) - 1.0;
}

double geodesic_phi_at_r(const GeodesicSegment& g, double r) {
    if (!std::isfinite(r) || r < g.r_min() - kRadiusSlack || r > g.r_max() + kRadiusSlack)
        throw ValidationError("radius " + std::to_string(r) + " outside the geodesic segment");
    if (g.radial()) return g.ref_state().phi();

    // |A + s (B - A)| = r on s in [0, 1].
    const Point a = cartesian(g.ref_state()), b = cartesian(g.target_state());
    const Point d{b.x - a.x, b.y - a.y};
    const double qa = dot(d, d);
    const double qb = 2.0 * dot(a, d);
    const double qc = dot(a, a) - r * r;
    const double disc = std::max(0.0, qb * qb - 4.0 * qa * qc);
    const double sq = std::sqrt(disc);
    // Cancellation-free pair of roots.
    const double q = -0.5 * (qb + (qb < 0.0 ? -sq : sq));
    double roots[2] = {q / qa, q != 0.0 ? qc / q : q / qa};
    if (roots[0] > roots[1]) std::swap(roots[0], roots[1]);

    constexpr double kParamSlack = 1e-9;
    for (double s : roots) {
        if (s >= -kParamSlack && s <= 1.0 + kParamSlack) {
            s = std::clamp(s, 0.0, 1.0);
            return canonical_angle(std::atan2(a.y + s * d.y, a.x + s * d.x));
        }
    }
    throw NumericError("no point of the geodesic segment at radius " + std::to_string(r));
}

}  // namespace polcirc
