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
 * Commands behind the command-line front end and the versioned JSON report
 * they produce. The human-readable table is a rendering of the same value.
 */

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "djsim/params.hpp"
#include "djsim/protocol.hpp"

namespace djsim::report {

inline constexpr const char *kSchema = "djsim.report/1";

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

enum class Command { Run, Verify, Params, Sample, Trace };

[[nodiscard]] std::string to_string(Command c);
[[nodiscard]] Command parse_command(std::string_view s);

struct RunRequest {
    Command command = Command::Run;
    std::optional<std::string> function_id; ///< f1..f8 or "all"
    protocol::Mode mode = protocol::Mode::Paper;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> n_atoms_oracle;
    /// Preset or file. For run/sample/trace it sets the ensemble; without
    /// it a single atom (the 8-dim collective model) at theta = pi/2 is used.
    std::optional<std::string> medium;
    std::optional<std::string> output_path;

    /// Throws InvalidArgument for inconsistent requests.
    void validate() const;

    bool operator==(const RunRequest &) const = default;
};

struct PatternProbability {
    Outcome pattern;
    std::array<std::string, 2> clicks;
    double probability = 0.0;
    bool operator==(const PatternProbability &) const = default;
};

struct PatternCount {
    Outcome pattern;
    std::array<std::string, 2> clicks;
    std::uint64_t count = 0;
    bool operator==(const PatternCount &) const = default;
};

struct SampleSummary {
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::vector<PatternCount> counts;
    /// Fraction of shots whose classified pattern matches the table.
    double classification_rate = 0.0;
    bool operator==(const SampleSummary &) const = default;
};

struct OracleCheck {
    std::uint64_t n_atoms = 0;
    std::string reference; ///< engine compared against
    double max_deviation = 0.0;
    double tolerance = kOracleTol;
    bool passed = false;
    std::string note;
    bool operator==(const OracleCheck &) const = default;
};

struct TraceStage {
    std::string name;
    std::string space;
    std::vector<std::array<double, 2>> amplitudes; ///< (re, im)
    bool operator==(const TraceStage &) const = default;
};

struct FunctionReport {
    std::string id;
    std::vector<int> table;
    std::string expected_classification;
    std::string mode;
    std::uint64_t n_atoms = 1;
    double theta = 0.0;
    int ensemble_evolutions = 0;
    double post_selection_probability = 1.0;
    std::vector<PatternProbability> distribution;
    Outcome pattern;
    std::string classification;
    std::array<std::string, 2> function_pair;
    double top_probability = 0.0;
    bool deterministic = false;
    bool agrees_with_table = false;
    std::vector<std::string> oracle_steps;
    std::vector<std::string> warnings;
    std::optional<OracleCheck> oracle_check;
    std::optional<SampleSummary> samples;
    std::vector<TraceStage> trace;
    bool operator==(const FunctionReport &) const = default;
};

struct CheckResult {
    std::string name;
    std::string group;
    bool required = true;
    /// "pass", or "expected-inconsistent" for audits that pass when the
    /// audited claim is shown to be inconsistent.
    std::string expectation = "pass";
    bool passed = false;
    double deviation = 0.0;
    double tolerance = 0.0;
    std::string detail;
    bool operator==(const CheckResult &) const = default;
};

struct RunReport {
    std::string schema = kSchema;
    RunRequest request;
    std::vector<FunctionReport> functions;
    std::vector<CheckResult> checks;
    std::optional<params::FeasibilityReport> feasibility;
    int exit_code = kExitOk;
    bool operator==(const RunReport &) const = default;
};

/// Serialized with keys in a fixed order.
[[nodiscard]] std::string to_json(const RunReport &r, int indent = 2);
/// Throws InvalidArgument on malformed input or a schema mismatch.
[[nodiscard]] RunReport from_json(std::string_view text);
[[nodiscard]] std::string render_table(const RunReport &r);

/// Dispatches on request.command. Input errors throw djsim::Error.
[[nodiscard]] RunReport execute(const RunRequest &request);

[[nodiscard]] RunReport cmd_run(const RunRequest &request);
[[nodiscard]] RunReport cmd_verify(const RunRequest &request);
[[nodiscard]] RunReport cmd_params(const RunRequest &request);
[[nodiscard]] RunReport cmd_sample(const RunRequest &request);
[[nodiscard]] RunReport cmd_trace(const RunRequest &request);

/// The named checks behind cmd_verify. Oracle equivalences run up to
/// `n_atoms_oracle` atoms.
[[nodiscard]] std::vector<CheckResult> verification_checks(std::uint64_t n_atoms_oracle);

/// Default atom bound for the oracle checks in verify.
inline constexpr std::uint64_t kDefaultVerifyOracleAtoms = 8;

/// Brute-force comparison of one protocol run: the symmetric-sector engine
/// at `n_atoms` against the unreduced simulation.
[[nodiscard]] OracleCheck oracle_check(const protocol::BooleanFunction &f,
                                       protocol::Mode mode,
                                       std::uint64_t n_atoms);

} // namespace djsim::report
