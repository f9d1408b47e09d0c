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

// Textbook gate-model circuit, deliberately built from plain qstate
// primitives only so that it shares no code path with the ensemble engines.

#include <algorithm>
#include <cmath>

#include "djsim/error.hpp"
#include "djsim/protocol.hpp"

namespace djsim::protocol {

namespace {

Matrix hadamard() {
    Matrix h(2, 2);
    const double r = 1.0 / std::sqrt(2.0);
    h << r, r, r, -r;
    return h;
}

std::string system_name(int i) { return "a" + std::to_string(i + 1); }

} // namespace

ReferenceResult reference_dj_circuit(const BooleanFunction &f) {
    const int n = f.n_bits();
    std::vector<Subsystem> subs;
    for (int i = 0; i < n; ++i) {
        subs.push_back({system_name(i), 2});
    }
    subs.push_back({"b", 2});
    const SpaceLabel space(std::move(subs));

    std::vector<std::size_t> start(static_cast<std::size_t>(n) + 1, 0);
    start.back() = 1;
    Vector amps = StateVector::basis(space, start).amplitudes();

    const Matrix h = hadamard();
    for (std::size_t q = 0; q <= static_cast<std::size_t>(n); ++q) {
        const std::size_t pos[] = {q};
        apply_local(h, pos, space, amps);
    }

    // |x, y> -> |x, y xor f(x)>; the ancilla is the least significant digit.
    Vector after(amps.size());
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
        const auto x = static_cast<std::size_t>(i) >> 1;
        const Eigen::Index target = i ^ static_cast<Eigen::Index>(f(x));
        after(target) = amps(i);
    }
    amps = std::move(after);

    for (std::size_t q = 0; q < static_cast<std::size_t>(n); ++q) {
        const std::size_t pos[] = {q};
        apply_local(h, pos, space, amps);
    }

    std::vector<std::string> measured;
    for (int i = 0; i < n; ++i) {
        measured.push_back(system_name(i));
    }
    ReferenceResult r;
    r.oracle_calls = 1;
    r.distribution = born_distribution(StateVector(space, std::move(amps)), measured);
    for (const auto &[bits, p] : r.distribution) {
        r.top_probability = std::max(r.top_probability, p);
        if (std::all_of(bits.begin(), bits.end(), [](int b) { return b == 0; })) {
            r.zero_probability = p;
        }
    }
    if (r.zero_probability >= 1.0 - kDeterministicTol) {
        r.classification = Classification::Constant;
        r.verdict_probability = r.zero_probability;
    } else {
        r.classification = r.zero_probability <= kDeterministicTol
                               ? Classification::Balanced
                               : Classification::Neither;
        r.verdict_probability = 1.0 - r.zero_probability;
    }
    r.deterministic = r.verdict_probability >= 1.0 - kDeterministicTol;
    return r;
}

} // namespace djsim::protocol
