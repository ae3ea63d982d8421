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

// polcirc: command-line front door for the polarised-light circuit model.
//
// Exit codes: 0 success, 1 usage error, 2 numeric or validation failure.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <nlohmann/json.hpp>

#include <iostream>
#include <optional>

#include "commands.hpp"
#include "experiment.hpp"
#include "polcirc/error.hpp"

namespace {

using namespace polcirc::runner;

struct Flags {
    std::string config;
    std::optional<std::string> out;
    std::optional<double> dt;
    std::optional<double> epsilon;
    std::optional<std::string> eps_grid;
    std::optional<std::string> example;
    std::optional<std::string> preset;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> tolerances;
};

void add_common(CLI::App* sub, Flags& f) {
    sub->add_option("--config", f.config, "JSON config file; flags override its values");
    sub->add_option("--out", f.out, "Output directory (default: current directory)");
    sub->add_option("--dt", f.dt, "RK4 step size");
}

ExperimentSpec build_spec(Command cmd, const Flags& f) {
    ExperimentSpec spec;
    spec.command = cmd;
    if (!f.config.empty()) load_config(spec, f.config);
    if (f.preset) apply_evolve_preset(spec, *f.preset);
    if (f.example) apply_example(spec, *f.example);
    if (f.out) spec.out_dir = *f.out;
    if (f.dt) spec.dt = *f.dt;
    if (f.epsilon) spec.epsilon = *f.epsilon;
    if (f.eps_grid) spec.epsilons = parse_eps_grid(*f.eps_grid);
    if (f.seed) spec.seed = *f.seed;
    for (const auto& t : f.tolerances) {
        const auto eq = t.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("--tolerance expects name=value, got '" + t + "'");
        try {
            std::size_t used = 0;
            const std::string value = t.substr(eq + 1);
            spec.tolerances[t.substr(0, eq)] = std::stod(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
        } catch (const std::logic_error&) {
            throw UsageError("bad tolerance value in '" + t + "'");
        }
    }
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Open-system circuit model for linearly polarised light"};
    app.require_subcommand(1);
    Flags f;

    auto* evolve = app.add_subcommand("evolve", "Integrate a GKLS trajectory (CSV + SVG)");
    add_common(evolve, f);
    evolve->add_option("--preset", f.preset, "strong-cyclic | strong-spiral | radial | custom");

    auto* gate = app.add_subcommand("gate", "Apply one polariser interaction (JSON)");
    add_common(gate, f);

    auto* circuit = app.add_subcommand("circuit", "Run the geodesic-following gate controller");
    add_common(circuit, f);
    circuit->add_option("--example", f.example, "Reference configuration a|b|c|d");
    circuit->add_option("--epsilon", f.epsilon, "Accuracy threshold");

    auto* sweep = app.add_subcommand("sweep", "Gate count against accuracy, with power-law fit");
    add_common(sweep, f);
    sweep->add_option("--example", f.example, "Reference configuration a|b|c|d");
    sweep->add_option("--eps-grid", f.eps_grid, "lo:hi:count[:log|:lin]");

    auto* verify = app.add_subcommand("verify", "Run the seeded cross-module oracle suites");
    add_common(verify, f);
    verify->add_option("--seed", f.seed, "Random seed");
    verify->add_option("--tolerance", f.tolerances, "Override a suite tolerance, name=value");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    Command cmd = Command::Verify;
    if (*evolve) cmd = Command::Evolve;
    else if (*gate) cmd = Command::Gate;
    else if (*circuit) cmd = Command::Circuit;
    else if (*sweep) cmd = Command::Sweep;

    try {
        const ExperimentSpec spec = build_spec(cmd, f);
        const CommandOutput out = run_command(spec);
        std::cout << out.summary << "\n";
        return out.ok ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "usage error: config: " << e.what() << "\n";
        return 1;
    } catch (const polcirc::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const polcirc::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 2;
    }
}
