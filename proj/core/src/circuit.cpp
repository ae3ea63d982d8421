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

#include "polcirc/circuit.hpp"

#include <gsl/gsl_fit.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <string>

#include "polcirc/error.hpp"
#include "polcirc/polariser.hpp"

namespace polcirc {

namespace {

// Halvings used to locate a gate or the terminal radius inside one step.
constexpr int kBisectionIterations = 60;

void validate(const CircuitConfig& cfg) {
    if (!(std::isfinite(cfg.epsilon) && cfg.epsilon > 0.0)) throw ValidationError("epsilon must be positive");
    if (!(std::isfinite(cfg.dt) && cfg.dt > 0.0)) throw ValidationError("dt must be positive");
    if (cfg.max_steps == 0) throw ValidationError("max_steps must be positive");
    if (cfg.target_state.r() <= 0.0) throw ValidationError("target radius must be positive");
    if (!(cfg.target_state.r() < cfg.ref_state.r()))
        throw ValidationError("target radius must be smaller than reference radius");
}

DensityState state_of(const PolarPoint& p) { return DensityState::make(std::min(1.0, std::exp(p.log_r)), p.phi); }

}  // namespace

CircuitConfig reference_configuration(char example) {
    CircuitConfig cfg;
    switch (std::tolower(static_cast<unsigned char>(example))) {
        case 'a':
            cfg.ref_state = make_state(1.0, 0.0);
            cfg.target_state = make_state(0.5, kPi / 6);
            break;
        case 'b':
            cfg.ref_state = make_state(1.0, kPi / 3);
            cfg.target_state = make_state(0.5, kPi / 2);
            break;
        case 'c':
            cfg.ref_state = make_state(1.0, kPi / 4);
            cfg.target_state = make_state(0.5, kPi / 12);
            break;
        case 'd':
            cfg.ref_state = make_state(1.0, 11 * kPi / 12);
            cfg.target_state = make_state(0.5, 3 * kPi / 4);
            break;
        default:
            throw ValidationError(std::string("unknown reference configuration '") + example + "' (expected a-d)");
    }
    return cfg;
}

double deviation(const DensityState& state, const GeodesicSegment& g) {
    return equal_r_distance(state.r(), state.phi(), geodesic_phi_at_r(g, state.r()));
}

CircuitResult run_circuit(const CircuitConfig& cfg) {
    validate(cfg);
    const GeodesicSegment geo = geodesic_between(cfg.ref_state, cfg.target_state);
    const double log_target = std::log(cfg.target_state.r());

    CircuitResult res;
    res.trajectory.dt = cfg.dt;
    res.trajectory.params = cfg.params;
    res.trajectory.samples.push_back({0.0, cfg.ref_state});
    double& max_rate = res.trajectory.max_log_radial_rate;

    PolarPoint y{cfg.ref_state.phi(), std::log(cfg.ref_state.r())};
    double t = 0.0;
    auto step = [&](double h) { return rk4_step(y, t, h, cfg.params, &max_rate); };
    auto exceeds = [&](const PolarPoint& p) { return deviation(state_of(p), geo) > cfg.epsilon; };

    for (std::size_t steps = 1;; ++steps) {
        if (steps > cfg.max_steps)
            throw NumericError("circuit did not reach the target radius within " + std::to_string(cfg.max_steps) +
                               " steps");
        double h = cfg.dt;
        PolarPoint next = step(h);

        const bool terminal = next.log_r <= log_target;
        if (terminal) {
            double lo = 0.0, hi = h;
            for (int i = 0; i < kBisectionIterations; ++i) {
                const double mid = 0.5 * (lo + hi);
                (step(mid).log_r <= log_target ? hi : lo) = mid;
            }
            h = hi;
            next = step(h);
        }

        if (exceeds(next)) {
            double lo = 0.0, hi = h;
            for (int i = 0; i < kBisectionIterations; ++i) {
                const double mid = 0.5 * (lo + hi);
                (exceeds(step(mid)) ? hi : lo) = mid;
            }
            const PolarPoint at = step(hi);
            t += hi;
            const DensityState before = state_of(at);
            const double gamma = geodesic_phi_at_r(geo, before.r());
            const DensityState after = ideal_gate_apply(before, gamma);
            res.gate_events.push_back({t, before.r(), before.phi(), gamma, after.r(), res.trajectory.samples.size()});
            y.phi = at.phi + angle_difference(after.phi(), before.phi());
            y.log_r = after.r() > 0.0 ? std::log(after.r()) : -std::numeric_limits<double>::infinity();
            res.trajectory.samples.push_back({t, after});
            if (y.log_r <= log_target) break;
            continue;
        }

        y = next;
        t += h;
        const DensityState s = state_of(y);
        res.trajectory.samples.push_back({t, s});
        res.max_sample_deviation = std::max(res.max_sample_deviation, deviation(s, geo));
        if (terminal) break;
    }

    res.gate_count = res.gate_events.size();
    res.final_state = res.trajectory.samples.back().state;
    res.final_target_distance = trace_distance(res.final_state, cfg.target_state);
    return res;
}

PowerLawFit loglog_fit(std::span<const SweepRow> rows) {
    if (rows.size() < 2) throw ValidationError("power-law fit needs at least two rows");
    std::vector<double> x, y;
    x.reserve(rows.size());
    y.reserve(rows.size());
    for (const SweepRow& row : rows) {
        if (row.gate_count == 0) throw ValidationError("power-law fit cannot use rows with zero gates");
        if (!(std::isfinite(row.epsilon) && row.epsilon > 0.0)) throw ValidationError("epsilon must be positive");
        x.push_back(std::log10(row.epsilon));
        y.push_back(std::log10(static_cast<double>(row.gate_count)));
    }
    if (std::all_of(x.begin(), x.end(), [&](double v) { return v == x.front(); }))
        throw ValidationError("power-law fit needs at least two distinct epsilons");
    double c0 = 0, c1 = 0, cov00 = 0, cov01 = 0, cov11 = 0, sumsq = 0;
    gsl_fit_linear(x.data(), 1, y.data(), 1, x.size(), &c0, &c1, &cov00, &cov01, &cov11, &sumsq);
    return {c0, c1};
}

SweepResult sweep_accuracy(const CircuitConfig& base, std::span<const double> epsilons) {
    if (epsilons.empty()) throw ValidationError("accuracy sweep needs at least one epsilon");
    std::vector<double> eps(epsilons.begin(), epsilons.end());
    std::sort(eps.begin(), eps.end(), std::greater<>());
    if (std::adjacent_find(eps.begin(), eps.end()) != eps.end())
        throw ValidationError("accuracy sweep epsilons must be distinct");

    SweepResult out;
    for (double e : eps) {
        CircuitConfig cfg = base;
        cfg.epsilon = e;
        out.rows.push_back({e, run_circuit(cfg).gate_count});
    }
    std::vector<SweepRow> usable;
    std::copy_if(out.rows.begin(), out.rows.end(), std::back_inserter(usable),
                 [](const SweepRow& r) { return r.gate_count > 0; });
    if (usable.size() >= 2) out.fit = loglog_fit(usable);
    return out;
}

std::vector<double> log_grid(double lo, double hi, std::size_t count) {
    if (!(std::isfinite(lo) && std::isfinite(hi) && lo > 0.0 && hi >= lo))
        throw ValidationError("log grid needs 0 < lo <= hi");
    if (count == 0) throw ValidationError("log grid needs at least one point");
    if (count == 1) return {lo};
    std::vector<double> grid(count);
    const double a = std::log10(lo), b = std::log10(hi);
    for (std::size_t k = 0; k < count; ++k)
        grid[k] = std::pow(10.0, a + (b - a) * static_cast<double>(k) / static_cast<double>(count - 1));
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

std::vector<double> default_epsilon_grid() { return log_grid(5e-4, 5e-2, 24); }

}  // namespace polcirc
