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

#include "djsim/optics.hpp"

#include <cmath>
#include <numbers>

#include "djsim/error.hpp"

namespace djsim::optics {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

bool is_photon_name(const std::string &name) {
    return name.rfind("photon", 0) == 0;
}

} // namespace

JonesMatrix::JonesMatrix(const Matrix2 &m) : m_(m) {
    const double dev =
        max_abs_diff(m_.adjoint() * m_, Matrix2::Identity());
    if (dev > kConstructionTol) {
        fail(ErrorKind::Numerical,
             "Jones matrix not unitary (deviation " + std::to_string(dev) +
                 ")");
    }
}

Operator JonesMatrix::as_operator(const std::string &name) const {
    return Operator(SpaceLabel::single(name, 2), m_, true);
}

double canonical_angle(double angle) {
    if (!std::isfinite(angle)) {
        fail(ErrorKind::InvalidArgument, "wave-plate angle must be finite");
    }
    double a = std::fmod(angle + kPi, 2.0 * kPi);
    if (a < 0.0) {
        a += 2.0 * kPi;
    }
    return a - kPi;
}

WavePlateSpec WavePlateSpec::quarter(double angle) {
    return {PlateKind::Quarter, canonical_angle(angle)};
}

WavePlateSpec WavePlateSpec::half(double angle) {
    return {PlateKind::Half, canonical_angle(angle)};
}

JonesMatrix WavePlateSpec::matrix() const {
    return kind == PlateKind::Quarter ? quarter_wave(angle) : half_wave(angle);
}

JonesMatrix quarter_wave(double angle) {
    const double c = std::cos(2.0 * angle);
    const double s = std::sin(2.0 * angle);
    Matrix2 m;
    m << c - kI, s, s, -c - kI;
    return JonesMatrix(kI * kInvSqrt2 * m);
}

JonesMatrix half_wave(double angle) {
    const double c = std::cos(2.0 * angle);
    const double s = std::sin(2.0 * angle);
    Matrix2 m;
    m << c, s, s, -c;
    return JonesMatrix(kI * m);
}

JonesMatrix hadamard_variant(int i) {
    Matrix2 m;
    switch (i) {
    case 1:
        m << 1.0, -1.0, 1.0, 1.0;
        break;
    case 2:
        m << 1.0, kI, kI, 1.0;
        break;
    case 3:
        m << 1.0, 1.0, -1.0, 1.0;
        break;
    case 4:
        m << 1.0, -kI, -kI, 1.0;
        break;
    default:
        fail(ErrorKind::InvalidArgument,
             "Hadamard variant index must be 1..4, got " + std::to_string(i));
    }
    return JonesMatrix(kInvSqrt2 * m);
}

JonesMatrix gadget_compose(std::span<const WavePlateSpec> plates) {
    if (plates.empty()) {
        fail(ErrorKind::InvalidArgument, "wave-plate gadget needs a plate");
    }
    Matrix2 m = Matrix2::Identity();
    for (const auto &p : plates) {
        m = m * p.matrix().matrix();
    }
    return JonesMatrix(m);
}

std::vector<WavePlateSpec> hadamard_gadget(int i) {
    switch (i) {
    case 1:
        return {WavePlateSpec::quarter(kPi / 4), WavePlateSpec::quarter(kPi / 4),
                WavePlateSpec::half(-3 * kPi / 8)};
    case 2:
        return {WavePlateSpec::quarter(kPi / 4)};
    case 3:
        return {WavePlateSpec::quarter(kPi / 4), WavePlateSpec::quarter(kPi / 4),
                WavePlateSpec::half(-kPi / 8)};
    case 4:
        return {WavePlateSpec::quarter(-kPi / 4)};
    default:
        fail(ErrorKind::InvalidArgument,
             "Hadamard variant index must be 1..4, got " + std::to_string(i));
    }
}

JonesMatrix composite_h(CompositeKind kind) {
    const int middle = kind == CompositeKind::Prime ? 4 : 2;
    const JonesMatrix m =
        hadamard_variant(1) * hadamard_variant(middle) * hadamard_variant(3);
    const double off =
        std::max(std::abs(m(0, 1)), std::abs(m(1, 0)));
    if (off > kConstructionTol) {
        fail(ErrorKind::Numerical,
             "composite rotation is not diagonal (off-diagonal " +
                 std::to_string(off) + ")");
    }
    // Drop the rounding residue so the result is exactly diagonal.
    Matrix2 d = Matrix2::Zero();
    d(0, 0) = m(0, 0);
    d(1, 1) = m(1, 1);
    return JonesMatrix(d);
}

const Matrix2 &linear_to_circular() {
    static const Matrix2 b = [] {
        Matrix2 m;
        m << 1.0, -kI, 1.0, kI;
        return Matrix2(kInvSqrt2 * m);
    }();
    return b;
}

StateVector basis_convert(const StateVector &state, PhotonBasis to,
                          std::vector<std::string> targets) {
    if (targets.empty()) {
        for (const auto &s : state.space().subsystems()) {
            if (is_photon_name(s.name)) {
                targets.push_back(s.name);
            }
        }
        if (targets.empty()) {
            fail(ErrorKind::InvalidArgument,
                 "state has no photon subsystem: " + state.space().describe());
        }
    }
    const Matrix2 &b = linear_to_circular();
    const Matrix2 m = to == PhotonBasis::Circular ? b : Matrix2(b.adjoint());
    Vector amps = state.amplitudes();
    for (const auto &name : targets) {
        const auto pos = state.space().position(name);
        if (!is_photon_name(name) || state.space()[pos].dim != 2) {
            fail(ErrorKind::InvalidArgument,
                 "basis conversion target '" + name +
                     "' is not a two-level photon subsystem");
        }
        const std::size_t p[] = {pos};
        apply_local(m, p, state.space(), amps);
    }
    return StateVector(state.space(), std::move(amps), state.normalized());
}

StateVector source_and_initialize() {
    const StateVector p1 = StateVector::basis(layout::photon(layout::kPhoton1), {0});
    const StateVector p2_emitted =
        StateVector::basis(layout::photon(layout::kPhoton2), {1});
    const StateVector p2 =
        half_wave(kPi / 4).as_operator(layout::kPhoton2).apply(p2_emitted);
    return tensor(p1, p2);
}

std::string click_label(int photon, int bit) {
    if ((photon != 1 && photon != 2) || (bit != 0 && bit != 1)) {
        fail(ErrorKind::InvalidArgument, "click label needs photon 1|2, bit 0|1");
    }
    return std::string(bit == 0 ? "HD" : "VD") + std::to_string(photon);
}

std::array<std::string, 2> clicks_for(const Outcome &pattern) {
    if (pattern.size() != 2) {
        fail(ErrorKind::InvalidArgument, "coincidence pattern needs two bits");
    }
    return {click_label(1, pattern[0]), click_label(2, pattern[1])};
}

ProbabilityTable photon_pattern_distribution(const StateVector &state,
                                             bool marginalize) {
    const std::vector<std::string> ph = {layout::kPhoton1, layout::kPhoton2};
    if (state.space().size() > 2 && !marginalize) {
        const Matrix rho = reduced_density(state, ph);
        const double purity = (rho * rho).trace().real();
        if (1.0 - purity > kOracleTol) {
            fail(ErrorKind::Precondition,
                 "photons are entangled with the rest of the system (purity " +
                     std::to_string(purity) +
                     "); request marginalization explicitly");
        }
    }
    return born_distribution(state, ph);
}

CoincidenceRecord detect_coincidence(const StateVector &state,
                                     std::uint64_t seed, bool marginalize) {
    const ProbabilityTable dist = photon_pattern_distribution(state, marginalize);
    const CountTable counts = sample_shots(dist, 1, seed);
    for (const auto &[pattern, n] : counts) {
        if (n == 1) {
            return {pattern, clicks_for(pattern)};
        }
    }
    fail(ErrorKind::Numerical, "single-shot sampling produced no outcome");
}

} // namespace djsim::optics
