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

#include <cmath>

#include "djsim/error.hpp"
#include "djsim/layout.hpp"
#include "djsim/simulators.hpp"

namespace djsim::sim {

namespace {

template <class... Ts> struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> Overloaded(Ts...) -> Overloaded<Ts...>;

Complex unit_pow(Complex z, std::uint64_t n) {
    const double nn = static_cast<double>(n);
    return std::polar(std::pow(std::abs(z), nn), nn * std::arg(z));
}

} // namespace

Matrix2 collective_atom_action(const Matrix2 &u, std::uint64_t n_atoms) {
    if (n_atoms == 1) {
        return u;
    }
    constexpr double tol = kConstructionTol;
    Matrix2 out = Matrix2::Zero();
    if (std::abs(u(0, 1)) <= tol && std::abs(u(1, 0)) <= tol) {
        out(0, 0) = unit_pow(u(0, 0), n_atoms);
        out(1, 1) = unit_pow(u(1, 1), n_atoms);
        return out;
    }
    if (std::abs(u(0, 0)) <= tol && std::abs(u(1, 1)) <= tol) {
        out(0, 1) = unit_pow(u(0, 1), n_atoms);
        out(1, 0) = unit_pow(u(1, 0), n_atoms);
        return out;
    }
    fail(ErrorKind::Unsupported,
         "per-atom rotation takes the ensemble out of {|0>_A, |1>_A}; use "
         "the symmetric-sector or naive engine");
}

StateVector simulate_collective(std::uint64_t n_atoms,
                                const StateVector &initial,
                                std::span<const SimStep> steps) {
    if (initial.dim() != 8) {
        fail(ErrorKind::InvalidArgument,
             "collective model needs an 8-dim state, got " +
                 initial.space().describe());
    }
    if (n_atoms == 0) {
        fail(ErrorKind::InvalidArgument, "ensemble needs at least one atom");
    }
    StateVector s = initial.relabeled(layout::collective());
    for (const auto &step : steps) {
        std::visit(
            Overloaded{
                [&](const ensemble::PhotonGate &g) {
                    const std::string &name =
                        g.photon == 1 ? layout::kPhoton1 : layout::kPhoton2;
                    if (g.photon != 1 && g.photon != 2) {
                        fail(ErrorKind::InvalidArgument,
                             "photon index must be 1 or 2");
                    }
                    s = apply_on(Operator(layout::photon(name), g.matrix, true),
                                 {name}, s);
                },
                [&](const ensemble::AtomRotation &r) {
                    const Matrix2 a = collective_atom_action(r.matrix, n_atoms);
                    s = apply_on(Operator(SpaceLabel::single(layout::kAtoms, 2),
                                          a, true),
                                 {layout::kAtoms}, s);
                },
                [&](const ensemble::EnsembleEvolution &e) {
                    s = ensemble::u_eff_exact(
                            ensemble::EnsembleConfig::with_theta(n_atoms, e.theta))
                            .apply(s);
                },
                [&](const ensemble::PaperEvolution &e) {
                    s = ensemble::PaperPolarizerMap(e.theta).apply(s).state;
                },
            },
            step);
    }
    return s;
}

} // namespace djsim::sim
