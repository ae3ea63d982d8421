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

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "experiment.hpp"

namespace polcirc::runner {

/// Output file could not be written; maps to exit code 2.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CommandOutput {
    std::vector<std::filesystem::path> files;
    std::string summary;  // printed to stdout
    bool ok = true;
};

CommandOutput cmd_evolve(const ExperimentSpec& spec);
CommandOutput cmd_gate(const ExperimentSpec& spec);
CommandOutput cmd_circuit(const ExperimentSpec& spec);
CommandOutput cmd_sweep(const ExperimentSpec& spec);
CommandOutput cmd_verify(const ExperimentSpec& spec);

CommandOutput run_command(const ExperimentSpec& spec);

struct SuiteResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

/// Suite names with their default tolerances, in report order.
const std::vector<std::pair<std::string, double>>& verify_suites();

/// Runs every suite; `overrides` replaces tolerances by name.
std::vector<SuiteResult> run_verify_suites(std::uint64_t seed, const std::map<std::string, double>& overrides);

std::string format_verify_report(std::uint64_t seed, const std::vector<SuiteResult>& results);

}  // namespace polcirc::runner
