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

#include <bit>
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

void check_naive_size(std::uint64_t n) {
    if (n == 0 || n > kMaxNaiveAtoms) {
        fail(ErrorKind::Unsupported,
             "naive simulation supports 1 <= N <= " +
                 std::to_string(kMaxNaiveAtoms) + ", got " + std::to_string(n));
    }
}

double binomial(std::uint64_t n, std::uint64_t k) {
    double r = 1.0;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return r;
}

} // namespace

SpaceLabel naive_space(std::uint64_t n_atoms) {
    check_naive_size(n_atoms);
    std::vector<Subsystem> subs;
    for (std::uint64_t j = 0; j < n_atoms; ++j) {
        subs.push_back({layout::atom_name(j), 2});
    }
    subs.push_back({layout::kPhoton1, 2});
    subs.push_back({layout::kPhoton2, 2});
    return SpaceLabel(std::move(subs));
}

StateVector naive_initial(const AtomState &atoms, const StateVector &photons) {
    const std::uint64_t n = atoms.n_atoms();
    check_naive_size(n);
    if (photons.dim() != 4) {
        fail(ErrorKind::InvalidArgument, "expected a two-photon state");
    }
    const std::size_t atom_dim = std::size_t{1} << n;
    Vector a = Vector::Zero(static_cast<Eigen::Index>(atom_dim));
    using R = AtomState::Representation;
    switch (atoms.representation()) {
    case R::Collective:
        a(0) += atoms.pair()(0);
        a(static_cast<Eigen::Index>(atom_dim - 1)) += atoms.pair()(1);
        break;
    case R::Product: {
        Vector acc = Vector::Constant(1, atoms.phase());
        for (std::uint64_t j = 0; j < n; ++j) {
            acc = kron(acc, atoms.pair());
        }
        a = acc;
        break;
    }
    case R::Dicke: {
        const Vector &d = atoms.dicke_amplitudes_raw();
        for (std::size_t i = 0; i < atom_dim; ++i) {
            const auto k = static_cast<std::uint64_t>(std::popcount(i));
            a(static_cast<Eigen::Index>(i)) =
                d(static_cast<Eigen::Index>(k)) / std::sqrt(binomial(n, k));
        }
        break;
    }
    }
    return StateVector(naive_space(n), kron(a, photons.amplitudes()));
}

Operator naive_hamiltonian(std::uint64_t n_atoms) {
    if (n_atoms == 0 || n_atoms > 8) {
        fail(ErrorKind::Unsupported,
             "dense naive Hamiltonian is limited to N <= 8");
    }
    const SpaceLabel space = naive_space(n_atoms);
    const SpaceLabel pair({{"atom", 2}, {"photon", 2}});
    const Operator term(pair, ensemble::atom_photon_term());
    const auto d = static_cast<Eigen::Index>(space.dim());
    Matrix h = Matrix::Zero(d, d);
    for (std::uint64_t j = 0; j < n_atoms; ++j) {
        for (const auto &ph : {layout::kPhoton1, layout::kPhoton2}) {
            h += embed(term, {layout::atom_name(j), ph}, space).matrix();
        }
    }
    return Operator(space, std::move(h));
}

StateVector full_simulate_naive(std::uint64_t n_atoms, const AtomState &atoms,
                                const StateVector &photons,
                                std::span<const SimStep> steps) {
    if (atoms.n_atoms() != n_atoms) {
        fail(ErrorKind::InvalidArgument, "atomic state has the wrong N");
    }
    const StateVector init = naive_initial(atoms, photons);
    const SpaceLabel &space = init.space();
    Vector amps = init.amplitudes();
    const std::size_t p1 = n_atoms;
    const std::size_t p2 = n_atoms + 1;
    const SpaceLabel pair({{"atom", 2}, {"photon", 2}});
    const Operator term(pair, ensemble::atom_photon_term());

    for (const auto &step : steps) {
        std::visit(
            Overloaded{
                [&](const ensemble::PhotonGate &g) {
                    if (g.photon != 1 && g.photon != 2) {
                        fail(ErrorKind::InvalidArgument,
                             "photon index must be 1 or 2");
                    }
                    const std::size_t pos[] = {g.photon == 1 ? p1 : p2};
                    apply_local(g.matrix, pos, space, amps);
                },
                [&](const ensemble::AtomRotation &r) {
                    for (std::size_t j = 0; j < n_atoms; ++j) {
                        const std::size_t pos[] = {j};
                        apply_local(r.matrix, pos, space, amps);
                    }
                },
                [&](const ensemble::EnsembleEvolution &e) {
                    const double per_term = e.theta / static_cast<double>(n_atoms);
                    const Matrix u = expm_hermitian(term, per_term).matrix();
                    for (std::size_t j = 0; j < n_atoms; ++j) {
                        for (const std::size_t ph : {p1, p2}) {
                            const std::size_t pos[] = {j, ph};
                            apply_local(u, pos, space, amps);
                        }
                    }
                },
                [&](const ensemble::PaperEvolution &) {
                    fail(ErrorKind::Unsupported,
                         "the claimed polarizer map is defined on the "
                         "collective qubit only");
                },
            },
            step);
    }
    return StateVector(space, std::move(amps));
}

DickeProjection project_to_dicke(const StateVector &naive) {
    if (naive.space().size() < 3) {
        fail(ErrorKind::InvalidArgument, "not a naive-space state");
    }
    const std::uint64_t n = naive.space().size() - 2;
    if (!(naive.space() == naive_space(n))) {
        fail(ErrorKind::InvalidArgument,
             "not a naive-space state: " + naive.space().describe());
    }
    DickeProjection out;
    out.amplitudes = Matrix::Zero(static_cast<Eigen::Index>(n + 1), 4);
    for (std::size_t i = 0; i < naive.dim(); ++i) {
        const std::size_t bits = i >> 2;
        const auto k = static_cast<std::uint64_t>(std::popcount(bits));
        out.amplitudes(static_cast<Eigen::Index>(k),
                       static_cast<Eigen::Index>(i & 3)) +=
            naive[i] / std::sqrt(binomial(n, k));
    }
    out.residual_weight =
        naive.amplitudes().squaredNorm() - out.amplitudes.squaredNorm();
    return out;
}

SymmetricEnsembleState
SymmetricEnsembleState::from_naive(const StateVector &naive) {
    const DickeProjection p = project_to_dicke(naive);
    if (p.residual_weight > kConstructionTol) {
        fail(ErrorKind::Precondition,
             "non-symmetric initial state (weight " +
                 std::to_string(p.residual_weight) +
                 " outside the symmetric sector)");
    }
    const std::uint64_t n = naive.space().size() - 2;
    return SymmetricEnsembleState(n, Dense(p.amplitudes));
}

StateVector full_simulate_dicke(const StateVector &naive_initial_state,
                                std::span<const SimStep> steps) {
    auto s = SymmetricEnsembleState::from_naive(naive_initial_state);
    for (const auto &step : steps) {
        s.apply(step);
    }
    return s.materialize();
}

} // namespace djsim::sim
