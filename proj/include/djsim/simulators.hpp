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
 * Three independent engines for the atoms + two photons system:
 *
 *  - SymmetricEnsembleState: the permutation-symmetric sector, (N+1) x 4.
 *  - full_simulate_naive: all 2^N x 4 amplitudes, Hamiltonian applied as the
 *    literal sum over atoms and photons. Ground truth for N <= 12.
 *  - simulate_collective: the 8-dim model with the ensemble as one qubit.
 *
 * Photon amplitudes are always stored in the linear basis.
 */

#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "djsim/ensemble.hpp"

namespace djsim::sim {

using ensemble::AtomState;
using ensemble::Matrix2;
using ensemble::SimStep;
using ensemble::Vector2;
using Vector4 = Eigen::Vector4cd;
using Matrix4 = Eigen::Matrix4cd;

/// Two-photon operator for a gate on photon 1 or 2.
[[nodiscard]] Matrix4 photon_gate_4x4(int photon, const Matrix2 &m);

/// Joint atoms/photons state restricted to the symmetric sector.
///
/// Two internal forms are kept. A superposition of spin-coherent products,
/// sum_m |s_m>^{(x)N} (x) |p_m>, supports every operation in O(#terms) and
/// covers all collective and product inputs at any N. A dense (N+1) x 4
/// Dicke-basis array handles arbitrary symmetric inputs, with per-atom
/// rotations limited to N <= ensemble::kMaxDenseSymmetricAtoms.
class SymmetricEnsembleState {
  public:
    struct CoherentTerm {
        Vector2 spinor; ///< unit norm, first nonzero entry real positive
        Vector4 photons;
    };

    /// `photons` lives on (photon1, photon2).
    static SymmetricEnsembleState from(const AtomState &atoms,
                                       const StateVector &photons);
    /// From an 8-dim collective-model state.
    static SymmetricEnsembleState from_collective(const StateVector &state,
                                                  std::uint64_t n_atoms);
    /// From an unreduced naive-space state; throws unless the atomic part is
    /// permutation-symmetric within kConstructionTol.
    static SymmetricEnsembleState from_naive(const StateVector &naive);

    [[nodiscard]] std::uint64_t n_atoms() const { return n_; }
    [[nodiscard]] bool is_coherent() const {
        return std::holds_alternative<Terms>(form_);
    }
    [[nodiscard]] std::size_t term_count() const;

    void apply(const SimStep &step);
    void apply_photon(int photon, const Matrix2 &m);
    void apply_atoms(const Matrix2 &m);
    void evolve(double theta);
    /// Declared polarizer map; atoms must sit in the two Dicke extremes.
    ensemble::PaperMapResult apply_paper(double theta);

    /// 4x4 reduced density matrix of the photons (linear basis).
    [[nodiscard]] Matrix photon_density() const;
    [[nodiscard]] ProbabilityTable photon_distribution() const;

    /// The 8-dim collective-model state. Throws when more than
    /// kConstructionTol of the weight lies outside the Dicke extremes.
    [[nodiscard]] StateVector collective_component() const;

    /// Dicke-basis state over layout::joint(N+1).
    [[nodiscard]] StateVector materialize() const;

  private:
    using Terms = std::vector<CoherentTerm>;
    using Dense = Matrix; // (N+1) x 4

    SymmetricEnsembleState(std::uint64_t n, std::variant<Terms, Dense> form)
        : n_(n), form_(std::move(form)) {}

    void canonicalize();

    std::uint64_t n_;
    std::variant<Terms, Dense> form_;
};

/// Evolves `atoms (x) photons` through `steps` in the symmetric sector.
[[nodiscard]] StateVector full_simulate_dicke(std::uint64_t n_atoms,
                                              const AtomState &atoms,
                                              const StateVector &photons,
                                              std::span<const SimStep> steps);
/// Same, starting from a naive-space state (must be symmetric).
[[nodiscard]] StateVector full_simulate_dicke(const StateVector &naive_initial,
                                              std::span<const SimStep> steps);

inline constexpr std::uint64_t kMaxNaiveAtoms = 12;

/// Unreduced space atom1..atomN, photon1, photon2.
[[nodiscard]] SpaceLabel naive_space(std::uint64_t n_atoms);

/// Embeds an atomic state and a two-photon state into the naive space.
[[nodiscard]] StateVector naive_initial(const AtomState &atoms,
                                        const StateVector &photons);

/// Dense Hamiltonian / lambda on the naive space: the sum over atoms j and
/// photons k of ensemble::atom_photon_term(). Only for small N.
[[nodiscard]] Operator naive_hamiltonian(std::uint64_t n_atoms);

/// Brute-force evolution. Exact evolution is applied as the product of the
/// 2N two-body exponentials exp(-i (theta/N) term_jk); the terms commute,
/// so this equals exp(-i theta/N * sum_jk term_jk).
[[nodiscard]] StateVector full_simulate_naive(std::uint64_t n_atoms,
                                              const AtomState &atoms,
                                              const StateVector &photons,
                                              std::span<const SimStep> steps);

/// Coordinates of a naive-space state in the Dicke basis, (N+1) x 4, plus
/// the weight left outside the symmetric sector.
struct DickeProjection {
    Matrix amplitudes;
    double residual_weight = 0.0;
};
[[nodiscard]] DickeProjection project_to_dicke(const StateVector &naive);

/// Collective 8-dim model. Per-atom rotations are accepted when N == 1 or
/// when they map the Dicke extremes onto each other (diagonal or
/// anti-diagonal matrices); anything else throws.
[[nodiscard]] StateVector simulate_collective(std::uint64_t n_atoms,
                                              const StateVector &initial,
                                              std::span<const SimStep> steps);

/// Collective action of a per-atom rotation on {|0>_A, |1>_A}.
[[nodiscard]] Matrix2 collective_atom_action(const Matrix2 &u,
                                             std::uint64_t n_atoms);

} // namespace djsim::sim
