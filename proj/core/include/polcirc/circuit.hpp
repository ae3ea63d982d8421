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

// Geodesic-following gate controller.
//
// The light state evolves under GKLS from a reference state towards a target
// radius. Whenever its trace distance to the geodesic point at the same
// radius exceeds the accuracy epsilon, an ideal polariser with gamma equal to
// the geodesic angle snaps it back. The number of gates N_g as a function of
// epsilon is the circuit complexity, and follows log10 N_g = m + n log10 eps.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "polcirc/geometry.hpp"
#include "polcirc/gkls.hpp"

namespace polcirc {

struct CircuitConfig {
    DensityState ref_state;
    DensityState target_state;
    GklsParams params = GklsParams::constant(0.0, 2.0, -2.0);
    double epsilon = 0.05;
    double dt = kDefaultStep;
    std::size_t max_steps = 100'000'000;
};

/// Reference/target pairs a..d used throughout the circuit experiments.
CircuitConfig reference_configuration(char example);

struct GateEvent {
    double t = 0.0;
    double r = 0.0;
    double phi_before = 0.0;
    double gamma = 0.0;
    double r_after = 0.0;
    std::size_t sample_index = 0;  // post-gate sample in the trajectory
};

struct CircuitResult {
    std::size_t gate_count = 0;
    std::vector<GateEvent> gate_events;
    // Step ends and post-gate states; a gate shares its time with the sample
    // that follows it.
    Trajectory trajectory;
    DensityState final_state;
    double final_target_distance = 0.0;
    // Largest deviation seen at any recorded sample.
    double max_sample_deviation = 0.0;
};

/// Distance to the geodesic at the same radius: r |sin(phi - phi_geo(r))|.
double deviation(const DensityState& state, const GeodesicSegment& g);

CircuitResult run_circuit(const CircuitConfig& cfg);

struct SweepRow {
    double epsilon = 0.0;
    std::size_t gate_count = 0;
};

struct PowerLawFit {
    double intercept = 0.0;  // m
    double slope = 0.0;      // n
};

/// Ordinary least squares of log10 N_g against log10 eps.
PowerLawFit loglog_fit(std::span<const SweepRow> rows);

struct SweepResult {
    std::vector<SweepRow> rows;  // epsilon descending
    // Fit over rows with N_g >= 1; empty when fewer than two such rows.
    std::optional<PowerLawFit> fit;
};

SweepResult sweep_accuracy(const CircuitConfig& base, std::span<const double> epsilons);

/// `count` logarithmically spaced points in [lo, hi], ascending.
std::vector<double> log_grid(double lo, double hi, std::size_t count);

/// 24 points in [5e-4, 5e-2].
std::vector<double> default_epsilon_grid();

}  // namespace polcirc
