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

#include "commands.hpp"

#include <fmt/format.h>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>

#include "polcirc/circuit.hpp"
#include "polcirc/geometry.hpp"
#include "polcirc/gkls.hpp"
#include "polcirc/polariser.hpp"
#include "svg.hpp"

namespace polcirc::runner {

namespace {

using nlohmann::ordered_json;

std::string num(double x) { return fmt::format("{:.17g}", x); }

std::filesystem::path write_file(const ExperimentSpec& spec, const std::string& name, const std::string& content) {
    std::error_code ec;
    std::filesystem::create_directories(spec.out_dir, ec);
    if (ec) throw IoError("cannot create output directory '" + spec.out_dir.string() + "': " + ec.message());
    const auto path = spec.out_dir / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    out.close();
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    return path;
}

ordered_json state_json(const DensityState& s) { return {{"r", s.r()}, {"phi", s.phi()}}; }

Point2 disk_point(const DensityState& s) { return {s.r() * std::cos(s.phi()), s.r() * std::sin(s.phi())}; }

// Splits a trajectory where phi wraps through the diameter.
void plot_disk_path(SvgPlot& plot, const std::vector<DensityState>& states, const std::string& color) {
    std::vector<Point2> piece;
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (i > 0 && std::abs(states[i].phi() - states[i - 1].phi()) > kPi / 2) {
            plot.polyline(piece, color);
            piece.clear();
        }
        piece.push_back(disk_point(states[i]));
    }
    plot.polyline(piece, color);
}

std::string trajectory_csv(const std::string& provenance, const std::vector<TrajectorySample>& samples) {
    std::string csv = "# " + provenance + "\n" + "t,r,phi,xi1,xi3\n";
    for (const auto& s : samples) {
        const StokesVector v = to_stokes(s.state);
        csv += fmt::format("{},{},{},{},{}\n", num(s.t), num(s.state.r()), num(s.state.phi()), num(v.xi1),
                           num(v.xi3));
    }
    return csv;
}

std::string gkls_provenance(const ExperimentSpec& spec) {
    return fmt::format("alpha={} beta={} energy={} dt={}", num(spec.alpha), num(spec.beta), num(spec.energy),
                       num(spec.dt));
}

CircuitConfig circuit_config(const ExperimentSpec& spec) {
    CircuitConfig cfg;
    cfg.ref_state = spec.ref;
    cfg.target_state = spec.target;
    cfg.params = GklsParams::constant(spec.alpha, spec.beta, spec.energy);
    cfg.epsilon = spec.epsilon;
    cfg.dt = spec.dt;
    return cfg;
}

std::string circuit_provenance(const ExperimentSpec& spec) {
    return fmt::format("example={} ref=({},{}) target=({},{}) {}", spec.example, num(spec.ref.r()),
                       num(spec.ref.phi()), num(spec.target.r()), num(spec.target.phi()), gkls_provenance(spec));
}

}  // namespace

CommandOutput cmd_evolve(const ExperimentSpec& spec) {
    GklsParams params = GklsParams::constant(spec.alpha, spec.beta, spec.energy);
    if (spec.drive == Drive::ConstantPhi) {
        const GklsParams base = GklsParams::constant(spec.alpha, spec.beta, 0.0);
        params = base.with_energy(constant_phi_drive(spec.start.phi(), spec.start.r(), base).energy);
    }
    const Trajectory tr = integrate(spec.start, params, 0.0, spec.duration, spec.dt);

    const std::string provenance =
        fmt::format("polcirc evolve preset={} drive={} start=({},{}) duration={} {}", spec.preset,
                    spec.drive == Drive::Gkls ? "gkls" : "constant-phi", num(spec.start.r()), num(spec.start.phi()),
                    num(spec.duration), gkls_provenance(spec));

    CommandOutput out;
    out.files.push_back(write_file(spec, "evolve.csv", trajectory_csv(provenance, tr.samples)));

    SvgPlot plot(-1.05, 1.05, -0.05, 1.05, 640, 360);
    plot.title(fmt::format("trajectory ({})", spec.preset));
    plot.description(provenance);
    plot.axes("r cos phi", "r sin phi");
    plot.half_disk();
    std::vector<DensityState> states;
    for (const auto& s : tr.samples) states.push_back(s.state);
    plot_disk_path(plot, states, "#1f5fbf");
    plot.marker(disk_point(tr.samples.front().state), "black");
    out.files.push_back(write_file(spec, "evolve.svg", plot.str()));

    const DensityState& last = tr.samples.back().state;
    out.summary = fmt::format("evolve: {} samples, final r={:.6g} phi={:.6g}", tr.samples.size(), last.r(), last.phi());
    return out;
}

CommandOutput cmd_gate(const ExperimentSpec& spec) {
    const PolariserGate g = PolariserGate::make(spec.gamma, spec.lambda_par, spec.lambda_perp, spec.ancilla);
    const InteractionOutcome o = interact(g, spec.light);
    const JointState joint = joint_evolve(g, spec.light);
    const double marginal_residual =
        std::max(max_abs_diff(to_matrix(o.light_after), trace_out_left(joint.matrix)),
                 max_abs_diff(to_matrix(o.polariser_after), trace_out_right(joint.matrix)));
    const Diattenuation d = diattenuation(o.light_after.r());

    ordered_json j;
    j["command"] = "gate";
    j["gate"] = {{"gamma", g.gamma},
                 {"lambda_par", g.lambda_par},
                 {"lambda_perp", g.lambda_perp},
                 {"ancilla", state_json(g.ancilla)}};
    j["light_before"] = state_json(spec.light);
    j["light_after"] = state_json(o.light_after);
    j["polariser_after"] = state_json(o.polariser_after);
    j["p_parallel"] = o.p_parallel;
    j["p_perpendicular"] = o.p_perp;
    j["diattenuation"] = d.diattenuation;
    j["extinction_ratio"] = d.ideal ? ordered_json("inf") : ordered_json(d.extinction_ratio);
    j["marginal_residual"] = marginal_residual;

    CommandOutput out;
    out.files.push_back(write_file(spec, "gate.json", j.dump(2) + "\n"));
    out.summary = fmt::format("gate: light r'={:.6g} phi'={:.6g}, p_par={:.6g}", o.light_after.r(),
                              o.light_after.phi(), o.p_parallel);
    return out;
}

CommandOutput cmd_circuit(const ExperimentSpec& spec) {
    const CircuitConfig cfg = circuit_config(spec);
    const CircuitResult res = run_circuit(cfg);
    const GeodesicSegment geo = geodesic_between(cfg.ref_state, cfg.target_state);
    const std::string provenance =
        fmt::format("polcirc circuit {} epsilon={}", circuit_provenance(spec), num(spec.epsilon));

    ordered_json j;
    j["command"] = "circuit";
    j["provenance"] = provenance;
    j["ref"] = state_json(cfg.ref_state);
    j["target"] = state_json(cfg.target_state);
    j["gkls"] = {{"alpha", spec.alpha}, {"beta", spec.beta}, {"energy", spec.energy}};
    j["epsilon"] = cfg.epsilon;
    j["dt"] = cfg.dt;
    j["geodesic"] = {{"c3", geo.c3()}, {"c4", geo.c4()}, {"radial", geo.radial()}};
    j["gate_count"] = res.gate_count;
    ordered_json events = ordered_json::array();
    for (const auto& e : res.gate_events)
        events.push_back({{"t", e.t}, {"r", e.r}, {"phi_before", e.phi_before}, {"gamma", e.gamma}, {"r_after", e.r_after}});
    j["gate_events"] = events;
    j["final_state"] = state_json(res.final_state);
    j["final_target_distance"] = res.final_target_distance;
    j["max_sample_deviation"] = res.max_sample_deviation;
    j["max_log_radial_rate"] = res.trajectory.max_log_radial_rate;

    CommandOutput out;
    out.files.push_back(write_file(spec, "circuit.json", j.dump(2) + "\n"));
    out.files.push_back(write_file(spec, "circuit.csv", trajectory_csv(provenance, res.trajectory.samples)));

    SvgPlot plot(-1.05, 1.05, -0.05, 1.05, 640, 360);
    plot.title(fmt::format("geodesic-following circuit, epsilon={:g}, N_g={}", cfg.epsilon, res.gate_count));
    plot.description(provenance);
    plot.axes("r cos phi", "r sin phi");
    plot.half_disk();
    plot.polyline({disk_point(cfg.ref_state), disk_point(cfg.target_state)}, "black", 1.5);
    // Piecewise trajectory: each piece ends at the pre-gate state, and the
    // gate jump is drawn dashed.
    const auto& samples = res.trajectory.samples;
    std::size_t begin = 0;
    auto flush = [&](std::size_t end, const DensityState* tail) {
        std::vector<DensityState> piece;
        for (std::size_t i = begin; i < end; ++i) piece.push_back(samples[i].state);
        if (tail) piece.push_back(*tail);
        plot_disk_path(plot, piece, "#1f5fbf");
    };
    for (const auto& e : res.gate_events) {
        const DensityState before = make_state(e.r, e.phi_before);
        flush(e.sample_index, &before);
        plot.polyline({disk_point(before), disk_point(samples[e.sample_index].state)}, "#c0392b", 1.0, true);
        plot.marker(disk_point(samples[e.sample_index].state), "#c0392b", 2.5);
        begin = e.sample_index;
    }
    flush(samples.size(), nullptr);
    plot.marker(disk_point(cfg.ref_state), "black");
    plot.marker(disk_point(cfg.target_state), "black");
    plot.label(disk_point(cfg.ref_state), "ref");
    plot.label(disk_point(cfg.target_state), "target");
    out.files.push_back(write_file(spec, "circuit.svg", plot.str()));

    out.summary = fmt::format("circuit: N_g={} final_target_distance={:.6g}", res.gate_count,
                              res.final_target_distance);
    return out;
}

CommandOutput cmd_sweep(const ExperimentSpec& spec) {
    const std::vector<double> eps = spec.epsilons.empty() ? default_epsilon_grid() : spec.epsilons;
    const SweepResult sweep = sweep_accuracy(circuit_config(spec), eps);
    const std::string provenance = fmt::format("polcirc sweep {} points={}", circuit_provenance(spec), eps.size());

    std::string csv = "# " + provenance + "\nepsilon,gate_count\n";
    for (const auto& row : sweep.rows) csv += fmt::format("{},{}\n", num(row.epsilon), row.gate_count);

    ordered_json j;
    j["command"] = "sweep";
    j["provenance"] = provenance;
    ordered_json rows = ordered_json::array();
    for (const auto& row : sweep.rows) rows.push_back({{"epsilon", row.epsilon}, {"gate_count", row.gate_count}});
    j["rows"] = rows;
    if (sweep.fit) j["fit"] = {{"m", sweep.fit->intercept}, {"n", sweep.fit->slope}};
    else j["fit"] = nullptr;

    CommandOutput out;
    out.files.push_back(write_file(spec, "sweep.csv", csv));
    out.files.push_back(write_file(spec, "sweep.json", j.dump(2) + "\n"));

    std::vector<Point2> pts;
    for (const auto& row : sweep.rows)
        if (row.gate_count > 0) pts.push_back({std::log10(row.epsilon), std::log10(double(row.gate_count))});
    if (!pts.empty()) {
        auto [xmin, xmax] = std::minmax_element(pts.begin(), pts.end(), [](auto a, auto b) { return a.x < b.x; });
        auto [ymin, ymax] = std::minmax_element(pts.begin(), pts.end(), [](auto a, auto b) { return a.y < b.y; });
        const double x0 = std::floor(xmin->x * 2) / 2, x1 = std::ceil(xmax->x * 2) / 2 + (xmin->x == xmax->x ? 0.5 : 0);
        const double y0 = std::floor(ymin->y * 2) / 2, y1 = std::ceil(ymax->y * 2) / 2 + (ymin->y == ymax->y ? 0.5 : 0);
        SvgPlot plot(x0, x1, y0, y1, 560, 420);
        plot.title(sweep.fit ? fmt::format("log N_g = {:.4f} + ({:.4f}) log eps", sweep.fit->intercept,
                                           sweep.fit->slope)
                             : std::string("log N_g against log eps (fit undefined)"));
        plot.description(provenance);
        plot.axes("log10 epsilon", "log10 N_g");
        for (const auto& p : pts) plot.marker(p, "#1f5fbf");
        if (sweep.fit) {
            const auto line = [&](double x) { return Point2{x, sweep.fit->intercept + sweep.fit->slope * x}; };
            plot.polyline({line(xmin->x), line(xmax->x)}, "#c0392b", 1.2);
        }
        out.files.push_back(write_file(spec, "sweep.svg", plot.str()));
    }

    out.summary = sweep.fit ? fmt::format("sweep: {} rows, m={:.6f} n={:.6f}", sweep.rows.size(),
                                          sweep.fit->intercept, sweep.fit->slope)
                            : fmt::format("sweep: {} rows, fit undefined", sweep.rows.size());
    return out;
}

CommandOutput cmd_verify(const ExperimentSpec& spec) {
    const auto results = run_verify_suites(spec.seed, spec.tolerances);
    CommandOutput out;
    out.summary = format_verify_report(spec.seed, results);
    if (!out.summary.empty() && out.summary.back() == '\n') out.summary.pop_back();
    out.files.push_back(write_file(spec, "verify_report.txt", out.summary + "\n"));
    out.ok = std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.passed; });
    return out;
}

CommandOutput run_command(const ExperimentSpec& spec) {
    switch (spec.command) {
        case Command::Evolve: return cmd_evolve(spec);
        case Command::Gate: return cmd_gate(spec);
        case Command::Circuit: return cmd_circuit(spec);
        case Command::Sweep: return cmd_sweep(spec);
        case Command::Verify: return cmd_verify(spec);
    }
    throw UsageError("unknown command");
}

}  // namespace polcirc::runner
