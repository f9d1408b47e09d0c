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

const Matrix4 &linear_to_circular_4() {
    static const Matrix4 b4 = [] {
        const Matrix2 &b = optics::linear_to_circular();
        Matrix4 m;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                m.block<2, 2>(2 * i, 2 * j) = b(i, j) * b;
            }
        }
        return m;
    }();
    return b4;
}

/// Number of photons in eps+ for circular index c = c1 * 2 + c2.
int plus_count(int c) { return (c / 2 == 0 ? 1 : 0) + (c % 2 == 0 ? 1 : 0); }

/// z^N for a complex z on or inside the unit circle.
Complex int_pow(Complex z, std::uint64_t n) {
    const double r = std::abs(z);
    if (r == 0.0) {
        return 0.0;
    }
    const double nn = static_cast<double>(n);
    return std::polar(std::pow(r, nn), nn * std::arg(z));
}

Vector4 photons_of(const StateVector &photons) {
    if (photons.dim() != 4 || photons.space().size() != 2) {
        fail(ErrorKind::InvalidArgument,
             "expected a two-photon state, got " + photons.space().describe());
    }
    return photons.amplitudes();
}

} // namespace

Matrix4 photon_gate_4x4(int photon, const Matrix2 &m) {
    const Matrix2 id = Matrix2::Identity();
    Matrix4 out;
    if (photon == 1) {
        out = kron(m, id);
    } else if (photon == 2) {
        out = kron(id, m);
    } else {
        fail(ErrorKind::InvalidArgument,
             "photon index must be 1 or 2, got " + std::to_string(photon));
    }
    return out;
}

SymmetricEnsembleState SymmetricEnsembleState::from(const AtomState &atoms,
                                                    const StateVector &photons) {
    const Vector4 p = photons_of(photons);
    const std::uint64_t n = atoms.n_atoms();
    using R = AtomState::Representation;
    switch (atoms.representation()) {
    case R::Collective: {
        Terms terms;
        if (atoms.pair()(0) != 0.0) {
            terms.push_back({Vector2(1.0, 0.0), atoms.pair()(0) * p});
        }
        if (atoms.pair()(1) != 0.0) {
            terms.push_back({Vector2(0.0, 1.0), atoms.pair()(1) * p});
        }
        SymmetricEnsembleState s(n, std::move(terms));
        s.canonicalize();
        return s;
    }
    case R::Product: {
        Terms terms{{atoms.pair(), atoms.phase() * p}};
        SymmetricEnsembleState s(n, std::move(terms));
        s.canonicalize();
        return s;
    }
    case R::Dicke: {
        Dense d = atoms.dicke_amplitudes_raw() * p.transpose();
        return SymmetricEnsembleState(n, std::move(d));
    }
    }
    fail(ErrorKind::InvalidArgument, "unknown atomic representation");
}

SymmetricEnsembleState
SymmetricEnsembleState::from_collective(const StateVector &state,
                                        std::uint64_t n_atoms) {
    if (state.dim() != 8) {
        fail(ErrorKind::InvalidArgument,
             "collective-model state must be 8-dim, got " +
                 state.space().describe());
    }
    if (n_atoms == 0) {
        fail(ErrorKind::InvalidArgument, "ensemble needs at least one atom");
    }
    Terms terms;
    const Vector4 ground = state.amplitudes().segment<4>(0);
    const Vector4 excited = state.amplitudes().segment<4>(4);
    if (!ground.isZero(0.0)) {
        terms.push_back({Vector2(1.0, 0.0), ground});
    }
    if (!excited.isZero(0.0)) {
        terms.push_back({Vector2(0.0, 1.0), excited});
    }
    return SymmetricEnsembleState(n_atoms, std::move(terms));
}

std::size_t SymmetricEnsembleState::term_count() const {
    if (const auto *t = std::get_if<Terms>(&form_)) {
        return t->size();
    }
    return 0;
}

void SymmetricEnsembleState::canonicalize() {
    auto *terms = std::get_if<Terms>(&form_);
    if (terms == nullptr) {
        return;
    }
    const double n = static_cast<double>(n_);
    for (auto &t : *terms) {
        // Gates are unitary, so any drift of the spinor norm is rounding;
        // left alone it would be amplified N-fold by every overlap.
        t.spinor /= t.spinor.norm();
        const Complex lead = std::abs(t.spinor(0)) > 0.0 ? t.spinor(0) : t.spinor(1);
        const double phi = std::arg(lead);
        t.spinor *= std::polar(1.0, -phi);
        t.photons *= std::polar(1.0, n * phi);
    }
    Terms merged;
    for (auto &t : *terms) {
        if (t.photons.isZero(0.0)) {
            continue;
        }
        bool absorbed = false;
        for (auto &m : merged) {
            if ((m.spinor - t.spinor).cwiseAbs().maxCoeff() == 0.0) {
                m.photons += t.photons;
                absorbed = true;
                break;
            }
        }
        if (!absorbed) {
            merged.push_back(t);
        }
    }
    *terms = std::move(merged);
}

void SymmetricEnsembleState::apply(const SimStep &step) {
    std::visit(
        Overloaded{
            [&](const ensemble::PhotonGate &g) { apply_photon(g.photon, g.matrix); },
            [&](const ensemble::AtomRotation &r) { apply_atoms(r.matrix); },
            [&](const ensemble::EnsembleEvolution &e) { evolve(e.theta); },
            [&](const ensemble::PaperEvolution &e) { (void)apply_paper(e.theta); },
        },
        step);
}

void SymmetricEnsembleState::apply_photon(int photon, const Matrix2 &m) {
    const Matrix4 g = photon_gate_4x4(photon, m);
    if (auto *terms = std::get_if<Terms>(&form_)) {
        for (auto &t : *terms) {
            t.photons = g * t.photons;
        }
    } else {
        auto &d = std::get<Dense>(form_);
        d = d * g.transpose();
    }
}

void SymmetricEnsembleState::apply_atoms(const Matrix2 &m) {
    if (max_abs_diff(m.adjoint() * m, Matrix2::Identity()) > kConstructionTol) {
        fail(ErrorKind::Precondition, "per-atom operation is not unitary");
    }
    if (auto *terms = std::get_if<Terms>(&form_)) {
        for (auto &t : *terms) {
            t.spinor = m * t.spinor;
        }
        canonicalize();
    } else {
        auto &d = std::get<Dense>(form_);
        d = ensemble::symmetric_rotation(m, n_) * d;
    }
}

void SymmetricEnsembleState::evolve(double theta) {
    if (!std::isfinite(theta)) {
        fail(ErrorKind::InvalidArgument, "theta must be finite");
    }
    const Matrix4 &b4 = linear_to_circular_4();
    const double n = static_cast<double>(n_);
    // Per atom, a photon configuration with n+ photons in eps+ shifts |g>
    // by lambda n+ and |g'> by lambda (2 - n+); lambda t = theta / N.
    const double per_atom = theta / n;

    if (auto *terms = std::get_if<Terms>(&form_)) {
        Terms next;
        for (const auto &t : *terms) {
            const Vector4 circ = b4 * t.photons;
            for (int np = 0; np <= 2; ++np) {
                Vector4 masked = Vector4::Zero();
                for (int c = 0; c < 4; ++c) {
                    if (plus_count(c) == np) {
                        masked(c) = circ(c);
                    }
                }
                if (masked.isZero(0.0)) {
                    continue;
                }
                Vector2 sp = t.spinor;
                sp(0) *= std::polar(1.0, -per_atom * np);
                sp(1) *= std::polar(1.0, -per_atom * (2 - np));
                next.push_back({sp, b4.adjoint() * masked});
            }
        }
        *terms = std::move(next);
        canonicalize();
        return;
    }

    auto &d = std::get<Dense>(form_);
    Dense circ = d * b4.transpose();
    for (Eigen::Index k = 0; k < circ.rows(); ++k) {
        const double kk = static_cast<double>(k);
        for (int c = 0; c < 4; ++c) {
            const int np = plus_count(c);
            const double energy = (n - kk) * np + kk * (2 - np);
            circ(k, c) *= std::polar(1.0, -per_atom * energy);
        }
    }
    d = circ * b4.conjugate();
}

ensemble::PaperMapResult SymmetricEnsembleState::apply_paper(double theta) {
    const ensemble::PaperPolarizerMap map(theta);
    ensemble::PaperMapResult r = map.apply(collective_component());
    *this = from_collective(r.state, n_);
    return r;
}

Matrix SymmetricEnsembleState::photon_density() const {
    if (const auto *terms = std::get_if<Terms>(&form_)) {
        Matrix rho = Matrix::Zero(4, 4);
        for (const auto &a : *terms) {
            for (const auto &b : *terms) {
                const Complex ov =
                    &a == &b ? Complex(1.0) : int_pow(b.spinor.dot(a.spinor), n_);
                if (ov == 0.0) {
                    continue;
                }
                rho += ov * a.photons * b.photons.adjoint();
            }
        }
        return rho;
    }
    const auto &d = std::get<Dense>(form_);
    return d.transpose() * d.conjugate();
}

ProbabilityTable SymmetricEnsembleState::photon_distribution() const {
    const Matrix rho = photon_density();
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > kConstructionTol) {
        fail(ErrorKind::Numerical,
             "symmetric-sector state lost normalization (" + std::to_string(tr) +
                 ")");
    }
    ProbabilityTable t;
    for (int p = 0; p < 4; ++p) {
        t[{p / 2, p % 2}] = rho(p, p).real();
    }
    return t;
}

StateVector SymmetricEnsembleState::collective_component() const {
    Vector v(8);
    if (const auto *terms = std::get_if<Terms>(&form_)) {
        Vector4 ground = Vector4::Zero();
        Vector4 excited = Vector4::Zero();
        for (const auto &t : *terms) {
            ground += int_pow(t.spinor(0), n_) * t.photons;
            excited += int_pow(t.spinor(1), n_) * t.photons;
        }
        v << ground, excited;
    } else {
        const auto &d = std::get<Dense>(form_);
        v << d.row(0).transpose(), d.row(static_cast<Eigen::Index>(n_)).transpose();
    }
    const double total = photon_density().trace().real();
    const double outside = total - v.squaredNorm();
    if (outside > kConstructionTol) {
        fail(ErrorKind::Precondition,
             "atoms are not confined to |0>_A and |1>_A (weight " +
                 std::to_string(outside) + " elsewhere)");
    }
    return StateVector(layout::collective(), std::move(v));
}

StateVector SymmetricEnsembleState::materialize() const {
    const auto rows = static_cast<Eigen::Index>(n_ + 1);
    Dense d;
    if (const auto *terms = std::get_if<Terms>(&form_)) {
        d = Dense::Zero(rows, 4);
        for (const auto &t : *terms) {
            d += ensemble::coherent_dicke_amplitudes(t.spinor, n_) *
                 t.photons.transpose();
        }
    } else {
        d = std::get<Dense>(form_);
    }
    // Row-major flattening: atoms are the most significant digit.
    Vector flat(rows * 4);
    for (Eigen::Index k = 0; k < rows; ++k) {
        flat.segment<4>(4 * k) = d.row(k).transpose();
    }
    return StateVector(layout::joint(n_ + 1), std::move(flat));
}

StateVector full_simulate_dicke(std::uint64_t n_atoms, const AtomState &atoms,
                                const StateVector &photons,
                                std::span<const SimStep> steps) {
    if (atoms.n_atoms() != n_atoms) {
        fail(ErrorKind::InvalidArgument,
             "atomic state has N=" + std::to_string(atoms.n_atoms()) +
                 ", simulation asked for N=" + std::to_string(n_atoms));
    }
    auto s = SymmetricEnsembleState::from(atoms, photons);
    for (const auto &step : steps) {
        s.apply(step);
    }
    return s.materialize();
}

} // namespace djsim::sim
