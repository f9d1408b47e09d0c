// Copyright 2026 The djsim Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "djsim/params.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "djsim/error.hpp"

namespace djsim::params {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double v, const char *what) {
    if (!std::isfinite(v) || v <= 0.0) {
        fail(ErrorKind::InvalidArgument,
             std::string(what) + " must be finite and positive");
    }
}

std::string fixed(double v, int digits) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(digits);
    os << v;
    return os.str();
}

} // namespace

void MediumSpec::validate() const {
    require_positive(length_m, "length_m");
    require_positive(coupling_rad_s, "coupling_rad_s");
    require_positive(relaxation_s, "relaxation_s");
    if (n_atoms == 0) {
        fail(ErrorKind::InvalidArgument, "n_atoms must be positive");
    }
}

MediumSpec preset(std::string_view name) {
    if (name == "cs-cell") {
        return {"cs-cell", 200e-6, 100000, 2.91e8, kDefaultRelaxationTime};
    }
    if (name == "rb-mot") {
        return {"rb-mot", 0.5e-3, 2500000, 3.53e6, kDefaultRelaxationTime};
    }
    fail(ErrorKind::InvalidArgument,
         "unknown preset '" + std::string(name) + "' (cs-cell, rb-mot)");
}

std::vector<std::string> preset_names() { return {"cs-cell", "rb-mot"}; }

MediumSpec parse_medium_json(std::string_view text, std::string name) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        fail(ErrorKind::InvalidArgument,
             std::string("medium spec is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        fail(ErrorKind::InvalidArgument, "medium spec must be a JSON object");
    }
    for (const auto &[key, value] : j.items()) {
        if (key != "length_m" && key != "n_atoms" && key != "coupling_rad_s" &&
            key != "relaxation_s") {
            fail(ErrorKind::InvalidArgument, "unknown medium key '" + key + "'");
        }
        if (!value.is_number()) {
            fail(ErrorKind::InvalidArgument, "medium key '" + key + "' must be a number");
        }
    }
    for (const char *key : {"length_m", "n_atoms", "coupling_rad_s"}) {
        if (!j.contains(key)) {
            fail(ErrorKind::InvalidArgument,
                 std::string("medium spec is missing '") + key + "'");
        }
    }
    MediumSpec m;
    m.name = std::move(name);
    m.length_m = j["length_m"].get<double>();
    m.coupling_rad_s = j["coupling_rad_s"].get<double>();
    if (j.contains("relaxation_s")) {
        m.relaxation_s = j["relaxation_s"].get<double>();
    }
    // Atom numbers are often written as 1e5; accept any integral value.
    const double n = j["n_atoms"].get<double>();
    if (!std::isfinite(n) || n < 1.0 || n != std::floor(n) || n > 1e18) {
        fail(ErrorKind::InvalidArgument, "n_atoms must be a positive integer");
    }
    m.n_atoms = static_cast<std::uint64_t>(n);
    m.validate();
    return m;
}

MediumSpec load_medium(std::string_view preset_or_path) {
    for (const auto &p : preset_names()) {
        if (preset_or_path == p) {
            return preset(p);
        }
    }
    const std::string path(preset_or_path);
    std::ifstream in(path);
    if (!in) {
        fail(ErrorKind::InvalidArgument,
             "'" + path + "' is neither a preset nor a readable file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_medium_json(buf.str(), path);
}

double transit_time(double length_m) {
    require_positive(length_m, "length");
    return length_m / kSpeedOfLight;
}

FeasibilityReport required_detuning(const MediumSpec &spec,
                                    double dispersive_threshold) {
    spec.validate();
    require_positive(dispersive_threshold, "dispersive threshold");
    FeasibilityReport r;
    r.medium = spec;
    r.dispersive_threshold = dispersive_threshold;
    r.transit_time_s = transit_time(spec.length_m);
    const double g = spec.coupling_rad_s;
    const auto n = static_cast<double>(spec.n_atoms);
    r.detuning_rad_s = 2.0 * g * g * n * r.transit_time_s / kPi;
    r.lambda_rad_s = g * g / r.detuning_rad_s;
    r.detuning_cyclic_hz = r.detuning_rad_s / (2.0 * kPi);
    r.ratio = r.detuning_rad_s / g;
    r.decoherence_margin = spec.relaxation_s / r.transit_time_s;
    r.dispersive_ok = r.ratio >= dispersive_threshold;
    r.decoherence_ok = r.decoherence_margin >= kDecoherenceMarginThreshold;

    r.notes.push_back("detuning is angular (rad/s); cyclic value is Delta/2pi = " +
                      fixed(r.detuning_cyclic_hz / 1e9, 4) + " GHz");
    if (!r.dispersive_ok) {
        r.notes.push_back("Delta/g = " + fixed(r.ratio, 3) +
                          " is below the dispersive threshold " +
                          fixed(dispersive_threshold, 2));
    }
    if (spec.name == "rb-mot") {
        r.notes.push_back("these inputs give Delta/g = " + fixed(r.ratio, 2) +
                          "; rounded, this is the often-quoted Delta ~ 9g");
    }
    return r;
}

ensemble::EnsembleConfig config_from(const FeasibilityReport &r) {
    return ensemble::EnsembleConfig::physical(
        r.medium.n_atoms, r.medium.coupling_rad_s, r.detuning_rad_s,
        r.transit_time_s, r.dispersive_threshold);
}

} // namespace djsim::params
