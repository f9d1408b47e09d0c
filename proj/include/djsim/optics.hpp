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
 * Jones calculus for the two photonic qubits.
 *
 * Matrices act on the linear polarization basis (|0> horizontal,
 * |1> vertical). The circular modes are |+> = |1,0> (eps+) and
 * |-> = |0,1> (eps-), related by
 *
 *     |0> = (|+> + |->) / sqrt(2),   |1> = (|+> - |->) / (i sqrt(2)).
 */

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "djsim/layout.hpp"
#include "djsim/qstate.hpp"

namespace djsim::optics {

using Matrix2 = Eigen::Matrix2cd;
using Vector2 = Eigen::Vector2cd;

enum class PhotonBasis { Linear, Circular };

/// Lossless 2x2 polarization transform in the linear basis.
class JonesMatrix {
  public:
    /// Throws unless `m` is unitary within kConstructionTol.
    explicit JonesMatrix(const Matrix2 &m);

    [[nodiscard]] const Matrix2 &matrix() const { return m_; }
    [[nodiscard]] Complex operator()(int r, int c) const { return m_(r, c); }
    [[nodiscard]] JonesMatrix operator*(const JonesMatrix &rhs) const {
        return JonesMatrix(m_ * rhs.m_);
    }
    [[nodiscard]] JonesMatrix adjoint() const {
        return JonesMatrix(m_.adjoint());
    }
    [[nodiscard]] Vector2 apply(const Vector2 &v) const { return m_ * v; }
    /// As an Operator on a single two-level subsystem.
    [[nodiscard]] Operator as_operator(const std::string &name) const;

  private:
    Matrix2 m_;
};

enum class PlateKind { Quarter, Half };

struct WavePlateSpec {
    PlateKind kind = PlateKind::Quarter;
    double angle = 0.0; ///< alignment angle in radians, canonical in [-pi, pi)

    static WavePlateSpec quarter(double angle);
    static WavePlateSpec half(double angle);

    [[nodiscard]] JonesMatrix matrix() const;
};

/// Wraps an angle into [-pi, pi). Throws on non-finite input.
[[nodiscard]] double canonical_angle(double angle);

/// Q(phi) = (i/sqrt2) [[cos2phi - i, sin2phi], [sin2phi, -cos2phi - i]]
[[nodiscard]] JonesMatrix quarter_wave(double angle);
/// H(phi) = i [[cos2phi, sin2phi], [sin2phi, -cos2phi]]
[[nodiscard]] JonesMatrix half_wave(double angle);

/// The four Hadamard-type rotations h1..h4, entry for entry.
[[nodiscard]] JonesMatrix hadamard_variant(int i);

/// Product of plate matrices in written operator order: the last plate in
/// the list is the first one the photon traverses.
[[nodiscard]] JonesMatrix gadget_compose(std::span<const WavePlateSpec> plates);

/// The wave-plate sequence realizing hadamard_variant(i).
[[nodiscard]] std::vector<WavePlateSpec> hadamard_gadget(int i);

enum class CompositeKind {
    Prime,       ///< h'  = h1 h4 h3
    DoublePrime, ///< h'' = h1 h2 h3
};

/// h' or h'', built by multiplying the Hadamard variants; throws if the
/// product is not diagonal within kConstructionTol.
[[nodiscard]] JonesMatrix composite_h(CompositeKind kind);

/// Columns are |0>, |1> written in circular coordinates (|+>, |->).
[[nodiscard]] const Matrix2 &linear_to_circular();

/// Applies the basis change to the listed photon subsystems (default: all
/// subsystems whose name starts with "photon"). `to == Circular` maps linear
/// coordinates to circular ones; `to == Linear` is the inverse.
[[nodiscard]] StateVector basis_convert(const StateVector &state,
                                        PhotonBasis to,
                                        std::vector<std::string> targets = {});

/// Ideal pair source plus half-wave plate: photon 1 leaves the PBS in |0>,
/// photon 2 leaves in |1> and is rotated by H(pi/4). Returns i|0,0>.
[[nodiscard]] StateVector source_and_initialize();

/// Detector that fires for `bit` on photon `photon` (1 or 2): HD1, VD1,
/// HD2, VD2.
[[nodiscard]] std::string click_label(int photon, int bit);

/// Joint linear-basis pattern distribution of photon1 and photon2. If the
/// state carries other subsystems, they must be in a product state with the
/// photons unless `marginalize` is set.
[[nodiscard]] ProbabilityTable
photon_pattern_distribution(const StateVector &state, bool marginalize = false);

struct CoincidenceRecord {
    Outcome pattern;                  ///< (bit of photon 1, bit of photon 2)
    std::array<std::string, 2> clicks; ///< e.g. {"HD1", "VD2"}
};

[[nodiscard]] CoincidenceRecord
detect_coincidence(const StateVector &state, std::uint64_t seed,
                   bool marginalize = false);

/// Maps a pattern to its detector pair.
[[nodiscard]] std::array<std::string, 2> clicks_for(const Outcome &pattern);

} // namespace djsim::optics
