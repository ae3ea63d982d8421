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

// Experiment description shared by every subcommand: built from an optional
// JSON config file and then overridden by command-line flags.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polcirc/gkls.hpp"
#include "polcirc/plane.hpp"

namespace polcirc::runner {

/// Malformed invocation or config; maps to exit code 1.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Command { Evolve, Gate, Circuit, Sweep, Verify };

const char* command_name(Command c);

enum class Drive { Gkls, ConstantPhi };

struct ExperimentSpec {
    Command command = Command::Verify;
    std::filesystem::path out_dir = ".";
    double dt = kDefaultStep;
    std::uint64_t seed = 1;

    // GKLS coefficients; the circuit defaults.
    double alpha = 0.0;
    double beta = 2.0;
    double energy = -2.0;

    // evolve
    std::string preset = "custom";
    Drive drive = Drive::Gkls;
    DensityState start = make_state(1.0, kPi / 2);
    double duration = 2.0;

    // gate
    double gamma = 0.0;
    double lambda_par = kPi / 2;
    double lambda_perp = 0.0;
    DensityState light = make_state(1.0, kPi / 6);
    DensityState ancilla = make_state(1.0, 0.0);

    // circuit and sweep
    std::string example = "a";
    DensityState ref = make_state(1.0, 0.0);
    DensityState target = make_state(0.5, kPi / 6);
    double epsilon = 0.05;
    std::vector<double> epsilons;

    // verify: suite name -> tolerance override
    std::map<std::string, double> tolerances;
};

/// Parses "1.5", "pi/3", "-pi/4", "11*pi/12", "2pi".
double parse_angle(const std::string& text);

/// Parses "lo:hi:count" with an optional ":log" or ":lin" spacing suffix.
std::vector<double> parse_eps_grid(const std::string& text);

/// Named coefficient sets for the cyclic, spiral and radial trajectory shapes.
void apply_evolve_preset(ExperimentSpec& spec, const std::string& name);

/// Loads reference configurations a..d into ref/target.
void apply_example(ExperimentSpec& spec, const std::string& name);

/// Overlays a JSON config file onto `spec`. Unknown keys are usage errors.
void load_config(ExperimentSpec& spec, const std::filesystem::path& path);

}  // namespace polcirc::runner
