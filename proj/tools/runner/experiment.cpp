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

#include "experiment.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>

#include "polcirc/circuit.hpp"
#include "polcirc/error.hpp"

namespace polcirc::runner {

namespace {

using nlohmann::json;

double parse_number(std::string_view s, const std::string& whole) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
        throw UsageError("cannot parse number '" + whole + "'");
    return v;
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    if (!obj.is_object()) throw UsageError("config section '" + where + "' must be an object");
    for (const auto& [key, value] : obj.items())
        if (!allowed.contains(key)) throw UsageError("unknown config key '" + where + "." + key + "'");
}

double number_at(const json& v, const std::string& key) {
    if (!v.is_number()) throw UsageError("config key '" + key + "' must be a number");
    return v.get<double>();
}

double angle_at(const json& v, const std::string& key) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return parse_angle(v.get<std::string>());
    throw UsageError("config key '" + key + "' must be a number or an angle string");
}

DensityState state_at(const json& v, const std::string& key) {
    check_keys(v, {"r", "phi"}, key);
    if (!v.contains("r") || !v.contains("phi")) throw UsageError("config key '" + key + "' needs r and phi");
    return make_state(number_at(v["r"], key + ".r"), angle_at(v["phi"], key + ".phi"));
}

template <class F>
void if_present(const json& obj, const char* key, F&& f) {
    if (auto it = obj.find(key); it != obj.end()) f(*it);
}

}  // namespace

const char* command_name(Command c) {
    switch (c) {
        case Command::Evolve: return "evolve";
        case Command::Gate: return "gate";
        case Command::Circuit: return "circuit";
        case Command::Sweep: return "sweep";
        case Command::Verify: return "verify";
    }
    return "?";
}

double parse_angle(const std::string& text) {
    std::string s;
    std::copy_if(text.begin(), text.end(), std::back_inserter(s), [](char c) { return c != ' '; });
    const auto pos = s.find("pi");
    if (pos == std::string::npos) return parse_number(s, text);

    std::string coeff = s.substr(0, pos);
    std::string rest = s.substr(pos + 2);
    if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
    double k = 1.0;
    if (coeff == "-") k = -1.0;
    else if (coeff == "+") k = 1.0;
    else if (!coeff.empty()) k = parse_number(coeff, text);
    double m = 1.0;
    if (!rest.empty()) {
        if (rest.front() != '/') throw UsageError("cannot parse angle '" + text + "'");
        m = parse_number(std::string_view(rest).substr(1), text);
        if (m == 0.0) throw UsageError("zero denominator in angle '" + text + "'");
    }
    return k * kPi / m;
}

std::vector<double> parse_eps_grid(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto colon = text.find(':', start);
        parts.push_back(text.substr(start, colon - start));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    if (parts.size() != 3 && parts.size() != 4) throw UsageError("--eps-grid expects lo:hi:count[:log|:lin]");
    const double lo = parse_number(parts[0], text);
    const double hi = parse_number(parts[1], text);
    long long count = 0;
    const auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), count);
    if (ec != std::errc() || ptr != parts[2].data() + parts[2].size() || count < 0)
        throw UsageError("bad count in eps grid '" + text + "'");
    if (count == 0) throw UsageError("empty epsilon list");
    const std::string spacing = parts.size() == 4 ? parts[3] : "log";
    if (!(lo > 0.0 && hi >= lo)) throw UsageError("eps grid needs 0 < lo <= hi");
    if (spacing == "log") return log_grid(lo, hi, static_cast<std::size_t>(count));
    if (spacing != "lin") throw UsageError("eps grid spacing must be log or lin");
    std::vector<double> grid(static_cast<std::size_t>(count), lo);
    for (long long i = 1; i < count; ++i) grid[i] = lo + (hi - lo) * static_cast<double>(i) / (count - 1);
    return grid;
}

void apply_evolve_preset(ExperimentSpec& spec, const std::string& name) {
    if (name == "strong-cyclic") {
        spec.alpha = -9.0, spec.beta = 20.0, spec.energy = 10.0;
        spec.drive = Drive::Gkls;
        spec.start = make_state(1.0, kPi / 2);
        spec.duration = 0.5;
    } else if (name == "strong-spiral") {
        spec.alpha = 0.5, spec.beta = 3.0, spec.energy = 10.0;
        spec.drive = Drive::Gkls;
        spec.start = make_state(1.0, kPi / 2);
        spec.duration = 2.0;
    } else if (name == "radial") {
        spec.alpha = 1.0, spec.beta = 2.0, spec.energy = 0.0;
        spec.drive = Drive::ConstantPhi;
        spec.start = make_state(1.0, kPi / 3);
        spec.duration = 2.0;
    } else if (name != "custom") {
        throw UsageError("unknown preset '" + name + "' (strong-cyclic, strong-spiral, radial, custom)");
    }
    spec.preset = name;
}

void apply_example(ExperimentSpec& spec, const std::string& name) {
    if (name.size() != 1) throw UsageError("example must be one of a, b, c, d");
    try {
        const CircuitConfig cfg = reference_configuration(name[0]);
        spec.ref = cfg.ref_state;
        spec.target = cfg.target_state;
        spec.alpha = 0.0, spec.beta = 2.0, spec.energy = -2.0;
        spec.example = name;
    } catch (const ValidationError& e) {
        throw UsageError(e.what());
    }
}

void load_config(ExperimentSpec& spec, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config '" + path.string() + "'");
    json cfg;
    try {
        cfg = json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError("config '" + path.string() + "': " + e.what());
    }
    check_keys(cfg, {"dt", "seed", "gkls", "evolve", "gate", "circuit", "sweep", "verify"}, "config");

    // Presets first so that explicit keys can refine them.
    if_present(cfg, "evolve", [&](const json& e) {
        check_keys(e, {"preset", "drive", "start", "duration"}, "evolve");
        if_present(e, "preset", [&](const json& v) { apply_evolve_preset(spec, v.get<std::string>()); });
    });
    if_present(cfg, "circuit", [&](const json& c) {
        check_keys(c, {"example", "ref", "target", "epsilon"}, "circuit");
        if_present(c, "example", [&](const json& v) { apply_example(spec, v.get<std::string>()); });
    });

    if_present(cfg, "dt", [&](const json& v) { spec.dt = number_at(v, "dt"); });
    if_present(cfg, "seed", [&](const json& v) {
        if (!v.is_number_unsigned()) throw UsageError("config key 'seed' must be a non-negative integer");
        spec.seed = v.get<std::uint64_t>();
    });
    if_present(cfg, "gkls", [&](const json& g) {
        check_keys(g, {"alpha", "beta", "energy"}, "gkls");
        if_present(g, "alpha", [&](const json& v) { spec.alpha = number_at(v, "gkls.alpha"); });
        if_present(g, "beta", [&](const json& v) { spec.beta = number_at(v, "gkls.beta"); });
        if_present(g, "energy", [&](const json& v) { spec.energy = number_at(v, "gkls.energy"); });
    });
    if_present(cfg, "evolve", [&](const json& e) {
        if_present(e, "drive", [&](const json& v) {
            const auto d = v.get<std::string>();
            if (d == "gkls") spec.drive = Drive::Gkls;
            else if (d == "constant-phi") spec.drive = Drive::ConstantPhi;
            else throw UsageError("evolve.drive must be gkls or constant-phi");
        });
        if_present(e, "start", [&](const json& v) { spec.start = state_at(v, "evolve.start"); });
        if_present(e, "duration", [&](const json& v) { spec.duration = number_at(v, "evolve.duration"); });
    });
    if_present(cfg, "gate", [&](const json& g) {
        check_keys(g, {"gamma", "lambda_par", "lambda_perp", "light", "ancilla"}, "gate");
        if_present(g, "gamma", [&](const json& v) { spec.gamma = angle_at(v, "gate.gamma"); });
        if_present(g, "lambda_par", [&](const json& v) { spec.lambda_par = angle_at(v, "gate.lambda_par"); });
        if_present(g, "lambda_perp", [&](const json& v) { spec.lambda_perp = angle_at(v, "gate.lambda_perp"); });
        if_present(g, "light", [&](const json& v) { spec.light = state_at(v, "gate.light"); });
        if_present(g, "ancilla", [&](const json& v) { spec.ancilla = state_at(v, "gate.ancilla"); });
    });
    if_present(cfg, "circuit", [&](const json& c) {
        if_present(c, "ref", [&](const json& v) { spec.ref = state_at(v, "circuit.ref"); });
        if_present(c, "target", [&](const json& v) { spec.target = state_at(v, "circuit.target"); });
        if_present(c, "epsilon", [&](const json& v) { spec.epsilon = number_at(v, "circuit.epsilon"); });
    });
    if_present(cfg, "sweep", [&](const json& s) {
        check_keys(s, {"eps_grid"}, "sweep");
        if_present(s, "eps_grid", [&](const json& v) {
            if (v.is_string()) {
                spec.epsilons = parse_eps_grid(v.get<std::string>());
            } else if (v.is_array()) {
                if (v.empty()) throw UsageError("empty epsilon list");
                spec.epsilons.clear();
                for (const auto& x : v) spec.epsilons.push_back(number_at(x, "sweep.eps_grid[]"));
            } else {
                throw UsageError("sweep.eps_grid must be a string or an array");
            }
        });
    });
    if_present(cfg, "verify", [&](const json& v) {
        check_keys(v, {"tolerances"}, "verify");
        if_present(v, "tolerances", [&](const json& t) {
            if (!t.is_object()) throw UsageError("verify.tolerances must be an object");
            for (const auto& [name, tol] : t.items()) spec.tolerances[name] = number_at(tol, "verify.tolerances");
        });
    });
}

}  // namespace polcirc::runner
