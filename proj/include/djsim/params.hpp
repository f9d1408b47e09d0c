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

/**
 * @file
 * Feasibility numbers for a concrete medium. The photon crosses a medium of
 * length L in T = L / c; the detuning is then fixed by lambda N T = pi/2
 * with lambda = g^2 / Delta, giving Delta = 2 g^2 N T / pi.
 *
 * Frequencies are angular (rad/s). detuning_cyclic_hz is Delta / 2 pi.
 */

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "djsim/ensemble.hpp"

namespace djsim::params {

inline constexpr double kSpeedOfLight = 299792458.0; // m/s
inline constexpr double kDefaultRelaxationTime = 1e-6; // s
/// decoherence_ok requires tau / T at least this large.
inline constexpr double kDecoherenceMarginThreshold = 1e3;

struct MediumSpec {
    std::string name; ///< preset name, file path or "custom"
    double length_m = 0.0;
    std::uint64_t n_atoms = 0;
    double coupling_rad_s = 0.0;
    double relaxation_s = kDefaultRelaxationTime;

    /// Throws InvalidArgument unless every field is finite and positive.
    void validate() const;

    bool operator==(const MediumSpec &) const = default;
};

/// "cs-cell": 200 um vapour cell, N = 1e5, g = 2.91e8 rad/s.
/// "rb-mot": 0.5 mm trap, N = 2.5e6, g = 3.53e6 rad/s.
[[nodiscard]] MediumSpec preset(std::string_view name);
[[nodiscard]] std::vector<std::string> preset_names();

/// JSON object with keys length_m, n_atoms, coupling_rad_s and optional
/// relaxation_s. Unknown keys are rejected.
[[nodiscard]] MediumSpec parse_medium_json(std::string_view text,
                                           std::string name = "custom");

/// A preset name, or else a path to a JSON medium file.
[[nodiscard]] MediumSpec load_medium(std::string_view preset_or_path);

/// L / c. Throws for non-positive or non-finite lengths.
[[nodiscard]] double transit_time(double length_m);

struct FeasibilityReport {
    MediumSpec medium;
    double transit_time_s = 0.0;
    double lambda_rad_s = 0.0;
    double detuning_rad_s = 0.0;
    double detuning_cyclic_hz = 0.0;
    double ratio = 0.0; ///< Delta / g
    double decoherence_margin = 0.0; ///< tau / T
    double dispersive_threshold = ensemble::kDefaultDispersiveThreshold;
    bool dispersive_ok = false;
    bool decoherence_ok = false;
    std::vector<std::string> notes;

    bool operator==(const FeasibilityReport &) const = default;
};

[[nodiscard]] FeasibilityReport
required_detuning(const MediumSpec &spec,
                  double dispersive_threshold =
                      ensemble::kDefaultDispersiveThreshold);

/// Ensemble configuration with interaction time T; theta comes out pi/2.
[[nodiscard]] ensemble::EnsembleConfig config_from(const FeasibilityReport &r);

} // namespace djsim::params
