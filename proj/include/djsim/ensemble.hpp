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
 * N-atom ensemble dispersively coupled to two polarization qubits.
 *
 * Units: hbar = 1, energies are angular frequencies in rad/s. Each atom has
 * ground levels |g> (index 0) and |g'> (index 1). |g> shifts with photons in
 * the eps+ mode and |g'> with photons in eps-, both at rate lambda = g^2 /
 * Delta. The collective qubit is |0>_A = prod |g>, |1>_A = prod |g'>.
 */

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "djsim/optics.hpp"
#include "djsim/qstate.hpp"

namespace djsim::ensemble {

using optics::Matrix2;
using optics::PhotonBasis;
using optics::Vector2;

inline constexpr double kDefaultDispersiveThreshold = 5.0;

/// Physical parameters plus the derived rate lambda and the dimensionless
/// evolution angle theta = lambda * N * t.
class EnsembleConfig {
  public:
    /// Throws on non-positive inputs. A detuning/coupling ratio below
    /// `dispersive_threshold` is allowed but recorded in warnings().
    static EnsembleConfig
    physical(std::uint64_t n_atoms, double coupling, double detuning,
             double interaction_time,
             double dispersive_threshold = kDefaultDispersiveThreshold);

    /// A deep-dispersive configuration (Delta = 100 g) tuned to reach
    /// `theta`. Useful when only the angle matters.
    static EnsembleConfig with_theta(std::uint64_t n_atoms, double theta);

    [[nodiscard]] std::uint64_t n_atoms() const { return n_atoms_; }
    [[nodiscard]] double coupling() const { return coupling_; }
    [[nodiscard]] double detuning() const { return detuning_; }
    [[nodiscard]] double lambda() const { return lambda_; }
    [[nodiscard]] double interaction_time() const { return time_; }
    [[nodiscard]] double theta() const { return theta_; }
    [[nodiscard]] double dispersive_ratio() const {
        return detuning_ / coupling_;
    }
    [[nodiscard]] const std::vector<std::string> &warnings() const {
        return warnings_;
    }

  private:
    EnsembleConfig() = default;

    std::uint64_t n_atoms_ = 1;
    double coupling_ = 1.0;
    double detuning_ = 1.0;
    double lambda_ = 1.0;
    double time_ = 0.0;
    double theta_ = 0.0;
    std::vector<std::string> warnings_;
};

/// State of the N two-level atoms, in one of three representations.
class AtomState {
  public:
    enum class Representation {
        Collective, ///< a|0>_A + b|1>_A
        Product,    ///< phase * (alpha|g> + beta|g'>)^{(x)N}
        Dicke,      ///< amplitudes over excitation number k = #atoms in |g'>
    };

    static AtomState collective(std::uint64_t n_atoms, const Vector2 &amps);
    static AtomState ground(std::uint64_t n_atoms);  ///< |0>_A
    static AtomState excited(std::uint64_t n_atoms); ///< |1>_A
    static AtomState product(std::uint64_t n_atoms, const Vector2 &spinor,
                             Complex phase = 1.0);
    /// `amps` has N+1 entries; entry k multiplies the normalized Dicke state
    /// with k excitations.
    static AtomState dicke(std::uint64_t n_atoms, Vector amps);

    [[nodiscard]] Representation representation() const { return rep_; }
    [[nodiscard]] std::uint64_t n_atoms() const { return n_; }
    /// Collective amplitudes or product spinor.
    [[nodiscard]] const Vector2 &pair() const { return pair_; }
    [[nodiscard]] Complex phase() const { return phase_; }
    [[nodiscard]] const Vector &dicke_amplitudes_raw() const { return dicke_; }

    /// Amplitudes over the N+1 Dicke states, whatever the representation.
    [[nodiscard]] Vector to_dicke() const;

    /// Product representation when the collective state is a Dicke
    /// extreme, Dicke otherwise. Other representations are returned as is.
    [[nodiscard]] AtomState lifted() const;

  private:
    Representation rep_ = Representation::Collective;
    std::uint64_t n_ = 1;
    Vector2 pair_ = Vector2(1.0, 0.0);
    Complex phase_ = 1.0;
    Vector dicke_;
};

/// Amplitudes of (alpha|g> + beta|g'>)^{(x)N} over the Dicke basis,
/// sqrt(C(N,k)) alpha^(N-k) beta^k, evaluated in log space.
[[nodiscard]] Vector coherent_dicke_amplitudes(const Vector2 &spinor,
                                               std::uint64_t n_atoms);

/// Largest N for which dense symmetric-sector rotations are supported.
inline constexpr std::uint64_t kMaxDenseSymmetricAtoms = 1024;

/// U^{(x)N} restricted to the symmetric sector, (N+1) x (N+1), through the
/// collective generator: U = e^{i gamma} exp(-i w.sigma) gives
/// e^{i N gamma} exp(-i sum_j w.sigma_j), tridiagonal in the Dicke basis.
[[nodiscard]] Matrix symmetric_rotation(const Matrix2 &u,
                                        std::uint64_t n_atoms);

/// Per-atom application of a single-atom unitary. Collective inputs are
/// lifted first (see AtomState::lifted).
[[nodiscard]] AtomState apply_per_atom(const Matrix2 &op,
                                       const AtomState &state);

// Microwave ------------------------------------------------------------------

struct MicrowavePulse {
    double area = 0.0;  ///< Omega * t
    double phase = 0.0; ///< field phase, canonical in (-pi, pi]

    static MicrowavePulse make(double area, double phase);
    /// Omega t = pi/4 with phase -pi/2, 0, pi/2, pi for h1..h4.
    static MicrowavePulse hadamard(int i);
    /// Omega t = pi/2, phase pi/2: the atomic NOT.
    static MicrowavePulse flip();
};

/// H / (hbar Omega) = -(e^{i phase}|g'><g| + h.c.) on one atom.
[[nodiscard]] Operator microwave_hamiltonian(const MicrowavePulse &pulse);

/// exp(-i H t) for the pulse, via expm_hermitian of the Hamiltonian.
[[nodiscard]] Operator microwave_rotation(const MicrowavePulse &pulse);

// Effective Hamiltonian ------------------------------------------------------

/// Collective-subspace effective Hamiltonian on (atoms, photon1, photon2):
/// lambda N [|0><0|_A (x) (P+ (x) 1 + 1 (x) P+) + |1><1|_A (x) (P- ...)],
/// expressed in the requested photon basis.
[[nodiscard]] Operator build_h_eff(const EnsembleConfig &config,
                                   PhotonBasis basis = PhotonBasis::Circular);

/// The same operator assembled directly in the linear basis from the mode
/// vectors |+> = (|0> + i|1>)/sqrt2 and |-> = (|0> - i|1>)/sqrt2.
[[nodiscard]] Operator build_h_eff_linear_projectors(const EnsembleConfig &config);

/// The linear-basis form as printed term by term:
/// (lambda N / 2) sum_k [|0><0|_A (x) (|0><0| - |1><1| + i|0><1| + i|1><0|)_k
///                     + |1><1|_A (x) (|0><0| - |1><1| - i|0><1| - i|1><0|)_k].
/// This matrix is not Hermitian.
[[nodiscard]] Operator build_h_eff_printed_linear(const EnsembleConfig &config);

/// exp(-i H_eff t) on the collective model, linear photon basis by default.
[[nodiscard]] Operator u_eff_exact(const EnsembleConfig &config,
                                   PhotonBasis basis = PhotonBasis::Linear);

// Declared polarizer map -----------------------------------------------------

struct PaperMapResult {
    StateVector state;                ///< renormalized output
    double post_selection_probability; ///< squared norm before renormalizing
    std::vector<std::string> warnings;
};

/// The claimed evolution as a linear, non-unitary map on the collective
/// model. Row family for |0>_A: every linear photon basis input goes to
/// phase * |0>_A ((-i|0> + |1>)/sqrt2)^{(x)2}, with phases -e^{-i theta},
/// e^{-i theta}, -i e^{-i theta}, -i e^{-i theta} for |0,0>, |1,1>, |0,1>,
/// |1,0>. The |1>_A family is its complex-conjugate mirror onto
/// ((i|0> + |1>)/sqrt2)^{(x)2}.
class PaperPolarizerMap {
  public:
    explicit PaperPolarizerMap(double theta);

    [[nodiscard]] double theta() const { return theta_; }
    /// 8x8 matrix of the linear extension on (atoms, photon1, photon2).
    [[nodiscard]] const Matrix &matrix() const { return m_; }

    /// Claimed image of the basis row |a>_A |p1, p2> (unit norm).
    [[nodiscard]] StateVector row(int atom, int p1, int p2) const;

    /// Applies the map to a collective-model state. Throws for the zero
    /// image; a superposed photon input is resolved by linear extension and
    /// reported in warnings.
    [[nodiscard]] PaperMapResult apply(const StateVector &state) const;

    /// Per-photon output for atom branch a: (-i|0>+|1>)/sqrt2 or (i|0>+|1>)/sqrt2.
    [[nodiscard]] static Vector2 polarizer_output(int atom);

  private:
    double theta_;
    Matrix m_;
};

struct PhasesClaimReport {
    std::array<std::string, 4> row_labels; ///< "|0>_A|0,0>" etc.
    std::array<double, 4> row_fidelity{};  ///< |<claimed|exact>|
    Matrix input_gram;
    Matrix claimed_gram;
    Matrix exact_gram;
    double input_gram_deviation = 0.0;    ///< max |G_in - I|
    double claimed_overlap_deviation = 0.0; ///< max | |G_claimed| - 1 |
    double exact_gram_deviation = 0.0;    ///< max |G_exact - I|
    bool claim_unitary = true;
    std::string verdict;
};

/// Compares the claimed map with exact evolution on the four |0>_A rows.
/// Requires theta = pi/2 within kConstructionTol.
[[nodiscard]] PhasesClaimReport check_phases_claim(const EnsembleConfig &config);

// Simulation steps -----------------------------------------------------------

struct PhotonGate {
    int photon = 1; ///< 1 or 2
    Matrix2 matrix;
    std::string label;
};

struct AtomRotation {
    Matrix2 matrix;
    std::string label;
};

/// Exact evolution under H_eff for the angle theta = lambda N t.
struct EnsembleEvolution {
    double theta = 0.0;
};

/// The declared polarizer map at angle theta.
struct PaperEvolution {
    double theta = 0.0;
};

using SimStep =
    std::variant<PhotonGate, AtomRotation, EnsembleEvolution, PaperEvolution>;

[[nodiscard]] std::string describe(const SimStep &step);

/// Two-body term |g><g| (x) P+ + |g'><g'| (x) P- on (atom, photon) in the
/// linear photon basis. The full Hamiltonian is lambda times the sum of this
/// term over every atom and both photons.
[[nodiscard]] Matrix atom_photon_term();

} // namespace djsim::ensemble
