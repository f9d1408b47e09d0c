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
 * Two-bit Deutsch-Jozsa run on two photons and an atomic ensemble, plus a
 * textbook n-bit gate-model circuit used as an independent reference.
 *
 * Inputs x in {0,1,2,3} are encoded by the two photons; the atoms serve as
 * the ancilla. The measured photon pattern (1,1) means constant, anything
 * else balanced, and each balanced pattern singles out a pair of functions.
 */

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "djsim/ensemble.hpp"
#include "djsim/simulators.hpp"

namespace djsim::protocol {

using ensemble::SimStep;

enum class Classification { Constant, Balanced, Neither };

[[nodiscard]] std::string to_string(Classification c);

/// f : {0, ..., 2^n - 1} -> {0, 1} as a truth table.
class BooleanFunction {
  public:
    /// Table length must be a power of two >= 2, entries 0 or 1. Two-bit
    /// tables that match the catalog pick up their id.
    explicit BooleanFunction(std::vector<int> table);

    /// Catalog function f1..f8.
    static BooleanFunction catalog(int index);
    /// Parses "f1".."f8"; throws InvalidArgument otherwise.
    static BooleanFunction from_id(std::string_view id);

    [[nodiscard]] int n_bits() const { return n_bits_; }
    [[nodiscard]] const std::vector<int> &table() const { return table_; }
    [[nodiscard]] int operator()(std::size_t x) const { return table_.at(x); }
    [[nodiscard]] const std::optional<std::string> &id() const { return id_; }
    /// id if present, otherwise the table as a bit string.
    [[nodiscard]] std::string label() const;
    [[nodiscard]] Classification classification() const { return class_; }

    bool operator==(const BooleanFunction &o) const {
        return table_ == o.table_;
    }

  private:
    int n_bits_ = 0;
    std::vector<int> table_;
    std::optional<std::string> id_;
    Classification class_ = Classification::Neither;
};

/// f1..f8 in catalog order.
[[nodiscard]] const std::vector<BooleanFunction> &catalog_functions();

/// All constant and balanced functions on n_bits inputs, 1 <= n_bits <= 4,
/// constants first, then balanced tables in lexicographic order.
[[nodiscard]] std::vector<BooleanFunction> enumerate_functions(int n_bits);

enum class Mode {
    Exact, ///< evolution generated by the dispersive Hamiltonian
    Paper, ///< the declared polarizer map
};

[[nodiscard]] std::string to_string(Mode m);
/// "exact" or "paper"; throws InvalidArgument otherwise.
[[nodiscard]] Mode parse_mode(std::string_view s);

struct ProtocolOutcome {
    Outcome pattern;
    Classification classification = Classification::Balanced;
    std::array<std::string, 2> function_pair;
};

/// Interprets a photon pattern. Throws for anything but two bits.
[[nodiscard]] ProtocolOutcome classify(const Outcome &pattern);

/// Which composite rotation each photon receives after the evolution.
struct PhotonCorrection {
    optics::CompositeKind photon1;
    optics::CompositeKind photon2;
};

/// Throws InvalidArgument for functions outside f3..f8.
[[nodiscard]] PhotonCorrection h_eq_for(const BooleanFunction &f);

struct Oracle {
    std::vector<SimStep> steps; ///< in application order
    bool uses_ensemble = false;
};

/// Balanced: per-atom h1, one evolution at `theta` (exact or declared map),
/// then the photon correction. f1: no steps. f2: per-atom NOT pulse.
/// Throws Unsupported for functions that are neither constant nor balanced
/// and for balanced tables outside the two-bit catalog.
[[nodiscard]] Oracle build_oracle(const BooleanFunction &f, Mode mode,
                                  double theta);

struct ProtocolStage {
    std::string name; ///< psi0, psi1, psi1_prime, psi1_double_prime, psi2, psi3
    sim::SymmetricEnsembleState state;
};

class ProtocolTrace {
  public:
    ProtocolTrace(BooleanFunction f, Mode mode, std::uint64_t n_atoms)
        : function_(std::move(f)), mode_(mode), n_atoms_(n_atoms) {}

    [[nodiscard]] const BooleanFunction &function() const { return function_; }
    [[nodiscard]] Mode mode() const { return mode_; }
    [[nodiscard]] std::uint64_t n_atoms() const { return n_atoms_; }
    [[nodiscard]] const std::vector<ProtocolStage> &stages() const {
        return stages_;
    }
    [[nodiscard]] bool has_stage(std::string_view name) const;
    [[nodiscard]] const sim::SymmetricEnsembleState &
    stage(std::string_view name) const;
    /// Dicke-basis state over layout::joint(N + 1).
    [[nodiscard]] StateVector state(std::string_view name) const;

    /// Squared norm retained by the declared map (1 when unused).
    [[nodiscard]] double post_selection_probability() const { return post_; }
    /// Evolutions executed during this run; 1 for balanced, 0 for constant.
    [[nodiscard]] int ensemble_evolutions() const { return evolutions_; }
    [[nodiscard]] const std::vector<std::string> &warnings() const {
        return warnings_;
    }
    [[nodiscard]] const std::vector<std::string> &oracle_steps() const {
        return oracle_steps_;
    }

    /// Photon pattern distribution of psi3.
    [[nodiscard]] ProbabilityTable final_distribution() const;
    /// Most likely pattern of psi3 and its interpretation.
    [[nodiscard]] ProtocolOutcome outcome() const;
    [[nodiscard]] double top_probability() const;

  private:
    friend ProtocolTrace run_protocol(const BooleanFunction &, Mode,
                                      const ensemble::EnsembleConfig &);

    BooleanFunction function_;
    Mode mode_;
    std::uint64_t n_atoms_;
    std::vector<ProtocolStage> stages_;
    double post_ = 1.0;
    int evolutions_ = 0;
    std::vector<std::string> warnings_;
    std::vector<std::string> oracle_steps_;
};

/// Source -> h1 on both photons and every atom -> oracle -> h1 on both
/// photons. Balanced functions need config.theta() == pi/2.
[[nodiscard]] ProtocolTrace run_protocol(const BooleanFunction &f, Mode mode,
                                         const ensemble::EnsembleConfig &config);

/// The whole run as SimSteps starting from |1>_A (x) source photons, for
/// feeding the independent engines.
[[nodiscard]] std::vector<SimStep> protocol_steps(const BooleanFunction &f,
                                                  Mode mode, double theta);

/// Deterministic-outcome threshold shared by the protocol and the
/// reference circuit.
inline constexpr double kDeterministicTol = 1e-9;

struct ReferenceResult {
    Classification classification = Classification::Neither;
    ProbabilityTable distribution; ///< over the n system qubits
    double zero_probability = 0.0; ///< P(all system qubits read 0)
    /// Probability of the reported verdict: zero_probability for constant,
    /// 1 - zero_probability otherwise.
    double verdict_probability = 0.0;
    /// Largest single-bitstring probability. For n >= 3 a balanced function
    /// can spread its weight over several nonzero strings, so this is not
    /// always 1 even though the verdict is.
    double top_probability = 0.0;
    bool deterministic = false; ///< verdict_probability >= 1 - kDeterministicTol
    int oracle_calls = 0;
};

/// Gate-model circuit on n system qubits and one ancilla prepared in |1>:
/// Hadamards, |x, y> -> |x, y xor f(x)>, Hadamards on the system, measure.
/// All-zero with certainty means constant, never all-zero means balanced;
/// anything in between is reported as Neither.
[[nodiscard]] ReferenceResult reference_dj_circuit(const BooleanFunction &f);

} // namespace djsim::protocol
