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
 * Dense complex linear algebra on small labeled tensor-product spaces:
 * states, operators, Kronecker products, subsystem embedding, Hermitian
 * exponentials, Born-rule distributions and phase-insensitive comparison.
 *
 * Subsystems are ordered big-endian: the first subsystem of a SpaceLabel is
 * the most significant digit of a flat basis index.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace djsim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Tolerance for invariants asserted when a value is constructed.
inline constexpr double kConstructionTol = 1e-12;
/// Tolerance for agreement between two independent simulation routes.
inline constexpr double kOracleTol = 1e-10;

struct Subsystem {
    std::string name;
    std::size_t dim = 0;

    bool operator==(const Subsystem &) const = default;
};

class SpaceLabel {
  public:
    SpaceLabel() = default;
    explicit SpaceLabel(std::vector<Subsystem> subsystems);

    static SpaceLabel single(std::string name, std::size_t dim);

    [[nodiscard]] const std::vector<Subsystem> &subsystems() const {
        return subsystems_;
    }
    [[nodiscard]] std::size_t size() const { return subsystems_.size(); }
    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] const Subsystem &operator[](std::size_t i) const {
        return subsystems_[i];
    }

    [[nodiscard]] std::optional<std::size_t>
    find(std::string_view name) const;
    /// Position of a named subsystem; throws on unknown names.
    [[nodiscard]] std::size_t position(std::string_view name) const;

    /// Concatenation; throws when a subsystem name appears in both.
    [[nodiscard]] SpaceLabel concat(const SpaceLabel &other) const;

    /// Mixed-radix digits of a flat index, one per subsystem.
    [[nodiscard]] std::vector<std::size_t> digits(std::size_t index) const;
    [[nodiscard]] std::size_t index(std::span<const std::size_t> digits) const;
    /// Distance in flat index between neighbouring values of subsystem i.
    [[nodiscard]] std::size_t stride(std::size_t i) const;

    [[nodiscard]] std::string describe() const;

    bool operator==(const SpaceLabel &other) const {
        return subsystems_ == other.subsystems_;
    }

  private:
    std::vector<Subsystem> subsystems_;
    std::size_t dim_ = 1;
};

class StateVector {
  public:
    /// Validates length and finiteness; with `normalized` set the norm must
    /// be 1 within kConstructionTol.
    StateVector(SpaceLabel space, Vector amplitudes, bool normalized = true);

    static StateVector basis(const SpaceLabel &space,
                             std::span<const std::size_t> digits);
    static StateVector basis(const SpaceLabel &space,
                             std::initializer_list<std::size_t> digits);

    [[nodiscard]] const SpaceLabel &space() const { return space_; }
    [[nodiscard]] const Vector &amplitudes() const { return amplitudes_; }
    [[nodiscard]] bool normalized() const { return normalized_; }
    [[nodiscard]] std::size_t dim() const { return space_.dim(); }
    [[nodiscard]] Complex operator[](std::size_t i) const {
        return amplitudes_(static_cast<Eigen::Index>(i));
    }
    [[nodiscard]] double norm() const { return amplitudes_.norm(); }

    /// Copy scaled to unit norm; throws on the zero vector.
    [[nodiscard]] StateVector renormalized() const;
    [[nodiscard]] StateVector relabeled(SpaceLabel space) const;

  private:
    SpaceLabel space_;
    Vector amplitudes_;
    bool normalized_;
};

class Operator {
  public:
    /// Validates shape and finiteness; with `unitary_claim` set asserts
    /// max|U^dagger U - I| <= kConstructionTol.
    Operator(SpaceLabel space, Matrix matrix, bool unitary_claim = false);

    static Operator identity(const SpaceLabel &space);

    [[nodiscard]] const SpaceLabel &space() const { return space_; }
    [[nodiscard]] const Matrix &matrix() const { return matrix_; }
    [[nodiscard]] bool unitary_claim() const { return unitary_; }
    [[nodiscard]] std::size_t dim() const { return space_.dim(); }

    [[nodiscard]] StateVector apply(const StateVector &state) const;
    [[nodiscard]] Operator adjoint() const;
    [[nodiscard]] Operator scaled(Complex factor) const;
    /// this * rhs, i.e. rhs acts first.
    [[nodiscard]] Operator operator*(const Operator &rhs) const;

    [[nodiscard]] double unitarity_deviation() const;
    [[nodiscard]] double hermiticity_deviation() const;

  private:
    SpaceLabel space_;
    Matrix matrix_;
    bool unitary_;
};

[[nodiscard]] double max_abs_diff(const Matrix &a, const Matrix &b);
[[nodiscard]] Matrix kron(const Matrix &a, const Matrix &b);

[[nodiscard]] StateVector tensor(const StateVector &a, const StateVector &b);
[[nodiscard]] Operator tensor(const Operator &a, const Operator &b);

/// Pads `op` with identities so it acts on the named subsystems of `space`.
/// The first tensor factor of `op` lands on targets[0], and so on.
[[nodiscard]] Operator embed(const Operator &op,
                             const std::vector<std::string> &targets,
                             const SpaceLabel &space);

/// In-place action of a local matrix on the subsystems at `positions`
/// without forming the full operator.
void apply_local(const Matrix &local, std::span<const std::size_t> positions,
                 const SpaceLabel &space, Vector &amplitudes);

/// Same as embed(op, targets, state.space()).apply(state), in O(dim * local).
[[nodiscard]] StateVector apply_on(const Operator &op,
                                   const std::vector<std::string> &targets,
                                   const StateVector &state);

/// exp(-i * theta * h / scale) by Hermitian eigendecomposition.
[[nodiscard]] Operator expm_hermitian(const Operator &h, double theta,
                                      double scale = 1.0);

using Outcome = std::vector<int>;
using ProbabilityTable = std::map<Outcome, double>;
using CountTable = std::map<Outcome, std::uint64_t>;

/// Joint outcome probabilities for the named subsystems, marginalizing all
/// others. Every outcome is listed, including zero-probability ones.
[[nodiscard]] ProbabilityTable
born_distribution(const StateVector &state,
                  const std::vector<std::string> &measured,
                  bool renormalize = false);

/// Reduced density matrix on the kept subsystems (in the given order).
[[nodiscard]] Matrix reduced_density(const StateVector &state,
                                     const std::vector<std::string> &kept);

/// Uniform variate in [0, 1) for one shot. Each shot owns a substream:
/// std::mt19937_64 seeded by std::seed_seq{seed_lo, seed_hi, shot_lo,
/// shot_hi}, first draw, top 53 bits.
[[nodiscard]] double shot_uniform(std::uint64_t seed, std::uint64_t shot);

/// Seeded multinomial sampling; the result depends only on (dist, shots,
/// seed), never on thread scheduling.
[[nodiscard]] CountTable sample_shots(const ProbabilityTable &dist,
                                      std::uint64_t shots, std::uint64_t seed);

struct PhaseComparison {
    bool equal = false;
    double phase = 0.0;   ///< arg<a|b>, meaningful when equal
    double overlap = 0.0; ///< |<a|b>|
};

/// True iff |<a|b>| >= 1 - tol; then b ~= exp(i phase) a.
[[nodiscard]] PhaseComparison
equal_up_to_global_phase(const StateVector &a, const StateVector &b,
                         double tol = kConstructionTol);

} // namespace djsim
