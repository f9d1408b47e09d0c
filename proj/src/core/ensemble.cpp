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

#include "djsim/ensemble.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "djsim/error.hpp"
#include "djsim/layout.hpp"

namespace djsim::ensemble {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

void require_positive(double v, const char *what) {
    if (!std::isfinite(v) || v <= 0.0) {
        fail(ErrorKind::InvalidArgument,
             std::string(what) + " must be positive and finite");
    }
}

void require_unit_norm(double n2, const char *what) {
    if (std::abs(n2 - 1.0) > kConstructionTol) {
        fail(ErrorKind::InvalidArgument,
             std::string(what) + " is not normalized (squared norm " +
                 std::to_string(n2) + ")");
    }
}

Matrix diag2(Complex a, Complex b) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

/// P (x) 1 + 1 (x) P on the two photons.
Matrix two_photon_sum(const Matrix &p) {
    const Matrix id = Matrix::Identity(2, 2);
    return kron(p, id) + kron(id, p);
}

Matrix to_linear(const Matrix &circular_2x2) {
    const Matrix2 &b = optics::linear_to_circular();
    return b.adjoint() * circular_2x2 * b;
}

/// Lowering of excitation number: <D_{k-1}| J+ |D_k> = sqrt(k (N - k + 1)).
Matrix collective_raise(std::uint64_t n) {
    const auto d = static_cast<Eigen::Index>(n + 1);
    Matrix jp = Matrix::Zero(d, d);
    for (std::uint64_t k = 1; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        jp(static_cast<Eigen::Index>(k - 1), static_cast<Eigen::Index>(k)) =
            std::sqrt(kk * (static_cast<double>(n) - kk + 1.0));
    }
    return jp;
}

} // namespace

// EnsembleConfig -------------------------------------------------------------

EnsembleConfig EnsembleConfig::physical(std::uint64_t n_atoms, double coupling,
                                        double detuning,
                                        double interaction_time,
                                        double dispersive_threshold) {
    if (n_atoms == 0) {
        fail(ErrorKind::InvalidArgument, "ensemble needs at least one atom");
    }
    require_positive(coupling, "coupling g");
    require_positive(detuning, "detuning Delta");
    if (!std::isfinite(interaction_time) || interaction_time < 0.0) {
        fail(ErrorKind::InvalidArgument,
             "interaction time must be finite and non-negative");
    }
    EnsembleConfig c;
    c.n_atoms_ = n_atoms;
    c.coupling_ = coupling;
    c.detuning_ = detuning;
    c.lambda_ = coupling * coupling / detuning;
    c.time_ = interaction_time;
    c.theta_ = c.lambda_ * static_cast<double>(n_atoms) * interaction_time;
    if (c.dispersive_ratio() < dispersive_threshold) {
        std::ostringstream os;
        os << "detuning/coupling = " << c.dispersive_ratio()
           << " is below the dispersive threshold " << dispersive_threshold;
        c.warnings_.push_back(os.str());
    }
    return c;
}

EnsembleConfig EnsembleConfig::with_theta(std::uint64_t n_atoms, double theta) {
    if (!std::isfinite(theta) || theta < 0.0) {
        fail(ErrorKind::InvalidArgument, "theta must be finite, non-negative");
    }
    constexpr double g = 1.0;
    constexpr double delta = 100.0;
    const double lambda = g * g / delta;
    const double t = theta / (lambda * static_cast<double>(n_atoms ? n_atoms : 1));
    EnsembleConfig c = physical(n_atoms, g, delta, t);
    c.theta_ = theta;
    return c;
}

// AtomState ------------------------------------------------------------------

AtomState AtomState::collective(std::uint64_t n_atoms, const Vector2 &amps) {
    if (n_atoms == 0) {
        fail(ErrorKind::InvalidArgument, "ensemble needs at least one atom");
    }
    require_unit_norm(amps.squaredNorm(), "collective atomic state");
    AtomState s;
    s.rep_ = Representation::Collective;
    s.n_ = n_atoms;
    s.pair_ = amps;
    return s;
}

AtomState AtomState::ground(std::uint64_t n_atoms) {
    return collective(n_atoms, Vector2(1.0, 0.0));
}

AtomState AtomState::excited(std::uint64_t n_atoms) {
    return collective(n_atoms, Vector2(0.0, 1.0));
}

AtomState AtomState::product(std::uint64_t n_atoms, const Vector2 &spinor,
                             Complex phase) {
    if (n_atoms == 0) {
        fail(ErrorKind::InvalidArgument, "ensemble needs at least one atom");
    }
    require_unit_norm(spinor.squaredNorm(), "single-atom spinor");
    require_unit_norm(std::norm(phase), "product-state phase");
    AtomState s;
    s.rep_ = Representation::Product;
    s.n_ = n_atoms;
    s.pair_ = spinor;
    s.phase_ = phase;
    return s;
}

AtomState AtomState::dicke(std::uint64_t n_atoms, Vector amps) {
    if (n_atoms == 0) {
        fail(ErrorKind::InvalidArgument, "ensemble needs at least one atom");
    }
    if (static_cast<std::uint64_t>(amps.size()) != n_atoms + 1) {
        fail(ErrorKind::InvalidArgument,
             "Dicke amplitudes need N+1 = " + std::to_string(n_atoms + 1) +
                 " entries");
    }
    require_unit_norm(amps.squaredNorm(), "Dicke state");
    AtomState s;
    s.rep_ = Representation::Dicke;
    s.n_ = n_atoms;
    s.dicke_ = std::move(amps);
    return s;
}

Vector AtomState::to_dicke() const {
    switch (rep_) {
    case Representation::Collective: {
        Vector v = Vector::Zero(static_cast<Eigen::Index>(n_ + 1));
        v(0) += pair_(0);
        v(static_cast<Eigen::Index>(n_)) += pair_(1);
        return v;
    }
    case Representation::Product:
        return phase_ * coherent_dicke_amplitudes(pair_, n_);
    case Representation::Dicke:
        return dicke_;
    }
    return {};
}

AtomState AtomState::lifted() const {
    if (rep_ != Representation::Collective) {
        return *this;
    }
    if (pair_(1) == 0.0) {
        return product(n_, Vector2(1.0, 0.0), pair_(0));
    }
    if (pair_(0) == 0.0) {
        return product(n_, Vector2(0.0, 1.0), pair_(1));
    }
    if (n_ == 1) {
        return product(1, pair_);
    }
    return dicke(n_, to_dicke());
}

Vector coherent_dicke_amplitudes(const Vector2 &spinor, std::uint64_t n_atoms) {
    const auto d = static_cast<Eigen::Index>(n_atoms + 1);
    Vector v = Vector::Zero(d);
    const Complex a = spinor(0);
    const Complex b = spinor(1);
    const double n = static_cast<double>(n_atoms);
    if (b == 0.0) {
        v(0) = std::polar(std::pow(std::abs(a), n), n * std::arg(a));
        return v;
    }
    if (a == 0.0) {
        v(d - 1) = std::polar(std::pow(std::abs(b), n), n * std::arg(b));
        return v;
    }
    // Work with log magnitudes and normalize the binomial weights by their
    // sum: summing lgamma terms directly leaves a norm error growing with N
    // (about 1e-10 at N = 1e5).
    const double la = std::log(std::abs(a));
    const double lb = std::log(std::abs(b));
    const double pa = std::arg(a);
    const double pb = std::arg(b);
    const double lgn = std::lgamma(n + 1.0);
    std::vector<double> log_mag(n_atoms + 1);
    double top = -std::numeric_limits<double>::infinity();
    for (std::uint64_t k = 0; k <= n_atoms; ++k) {
        const double kk = static_cast<double>(k);
        const double log_binom =
            lgn - std::lgamma(kk + 1.0) - std::lgamma(n - kk + 1.0);
        log_mag[k] = 0.5 * log_binom + (n - kk) * la + kk * lb;
        top = std::max(top, log_mag[k]);
    }
    double weight = 0.0;
    for (const double lm : log_mag) {
        weight += std::exp(2.0 * (lm - top));
    }
    // Squared norm of the product state is (|a|^2 + |b|^2)^N.
    const double log_norm = 0.5 * n * std::log(std::norm(a) + std::norm(b));
    const double shift = log_norm - 0.5 * std::log(weight) - top;
    for (std::uint64_t k = 0; k <= n_atoms; ++k) {
        const double lm = log_mag[k] + shift;
        if (lm < -745.0) {
            continue; // below the smallest subnormal
        }
        const double kk = static_cast<double>(k);
        v(static_cast<Eigen::Index>(k)) =
            std::polar(std::exp(lm), (n - kk) * pa + kk * pb);
    }
    return v;
}

Matrix symmetric_rotation(const Matrix2 &u, std::uint64_t n_atoms) {
    if (n_atoms == 0 || n_atoms > kMaxDenseSymmetricAtoms) {
        fail(ErrorKind::Unsupported,
             "dense symmetric rotation supports 1 <= N <= " +
                 std::to_string(kMaxDenseSymmetricAtoms) + ", got " +
                 std::to_string(n_atoms));
    }
    if (max_abs_diff(u.adjoint() * u, Matrix2::Identity()) > kConstructionTol) {
        fail(ErrorKind::Precondition, "per-atom operation is not unitary");
    }
    const double n = static_cast<double>(n_atoms);
    const auto d = static_cast<Eigen::Index>(n_atoms + 1);

    // u = e^{i gamma} v with det v = 1; v = cos w - i sin w (n . sigma).
    const double gamma = 0.5 * std::arg(u.determinant());
    const Matrix2 v = std::polar(1.0, -gamma) * u;
    const double snz = -v(0, 0).imag();
    const double snx = -v(0, 1).imag();
    const double sny = -v(0, 1).real();
    const double s = std::sqrt(snx * snx + sny * sny + snz * snz);
    const double c = v(0, 0).real();
    const Complex global = std::polar(1.0, n * gamma);

    if (s < 1e-15) {
        // v = +-1
        const double sign = (c > 0.0 || n_atoms % 2 == 0) ? 1.0 : -1.0;
        return global * sign * Matrix::Identity(d, d);
    }

    const double w = std::atan2(s, c) / s;
    const Matrix jp = collective_raise(n_atoms);
    const Matrix jm = jp.adjoint();
    Matrix two_jz = Matrix::Zero(d, d);
    for (Eigen::Index k = 0; k < d; ++k) {
        two_jz(k, k) = n - 2.0 * static_cast<double>(k);
    }
    const Matrix two_jx = jp + jm;
    const Matrix two_jy = -kI * (jp - jm);
    const Matrix generator = w * (snx * two_jx + sny * two_jy + snz * two_jz);

    const SpaceLabel sector = SpaceLabel::single("symmetric", n_atoms + 1);
    const Operator rot = expm_hermitian(Operator(sector, generator), 1.0);
    return global * rot.matrix();
}

AtomState apply_per_atom(const Matrix2 &op, const AtomState &state) {
    if (max_abs_diff(op.adjoint() * op, Matrix2::Identity()) > kConstructionTol) {
        fail(ErrorKind::Precondition, "per-atom operation is not unitary");
    }
    const AtomState s = state.lifted();
    switch (s.representation()) {
    case AtomState::Representation::Product: {
        Vector2 sp = op * s.pair();
        return AtomState::product(s.n_atoms(), sp, s.phase());
    }
    case AtomState::Representation::Dicke: {
        Vector out = symmetric_rotation(op, s.n_atoms()) * s.dicke_amplitudes_raw();
        return AtomState::dicke(s.n_atoms(), std::move(out));
    }
    case AtomState::Representation::Collective:
        break;
    }
    fail(ErrorKind::Numerical, "collective state was not lifted");
}

// Microwave ------------------------------------------------------------------

MicrowavePulse MicrowavePulse::make(double area, double phase) {
    if (!std::isfinite(area) || !std::isfinite(phase)) {
        fail(ErrorKind::InvalidArgument, "microwave pulse must be finite");
    }
    double p = std::fmod(phase, 2.0 * kPi);
    if (p <= -kPi) {
        p += 2.0 * kPi;
    } else if (p > kPi) {
        p -= 2.0 * kPi;
    }
    return {area, p};
}

MicrowavePulse MicrowavePulse::hadamard(int i) {
    if (i < 1 || i > 4) {
        fail(ErrorKind::InvalidArgument, "Hadamard index must be 1..4");
    }
    return make(kPi / 4, -kPi / 2 + (i - 1) * kPi / 2);
}

MicrowavePulse MicrowavePulse::flip() { return make(kPi / 2, kPi / 2); }

Operator microwave_hamiltonian(const MicrowavePulse &pulse) {
    Matrix h = Matrix::Zero(2, 2);
    h(1, 0) = -std::polar(1.0, pulse.phase);
    h(0, 1) = -std::polar(1.0, -pulse.phase);
    return Operator(SpaceLabel::single("atom", 2), std::move(h));
}

Operator microwave_rotation(const MicrowavePulse &pulse) {
    return expm_hermitian(microwave_hamiltonian(pulse), pulse.area);
}

// Effective Hamiltonian ------------------------------------------------------

Operator build_h_eff(const EnsembleConfig &config, PhotonBasis basis) {
    Matrix p_plus = diag2(1.0, 0.0);
    Matrix p_minus = diag2(0.0, 1.0);
    if (basis == PhotonBasis::Linear) {
        p_plus = to_linear(p_plus);
        p_minus = to_linear(p_minus);
    }
    // Summing the per-atom projector over the N atoms of a Dicke extreme
    // yields N times the collective projector.
    const double scale = config.lambda() * static_cast<double>(config.n_atoms());
    const Matrix h = scale * (kron(diag2(1.0, 0.0), two_photon_sum(p_plus)) +
                              kron(diag2(0.0, 1.0), two_photon_sum(p_minus)));
    return Operator(layout::collective(), h);
}

Operator build_h_eff_linear_projectors(const EnsembleConfig &config) {
    const double r = 1.0 / std::sqrt(2.0);
    Vector plus(2);
    plus << r, kI * r;
    Vector minus(2);
    minus << r, -kI * r;
    const Matrix p_plus = plus * plus.adjoint();
    const Matrix p_minus = minus * minus.adjoint();
    const double scale = config.lambda() * static_cast<double>(config.n_atoms());
    const Matrix h = scale * (kron(diag2(1.0, 0.0), two_photon_sum(p_plus)) +
                              kron(diag2(0.0, 1.0), two_photon_sum(p_minus)));
    return Operator(layout::collective(), h);
}

Operator build_h_eff_printed_linear(const EnsembleConfig &config) {
    // |0><0| - |1><1| +- i|0><1| +- i|1><0|
    Matrix g_term(2, 2);
    g_term << 1.0, kI, kI, -1.0;
    Matrix gp_term(2, 2);
    gp_term << 1.0, -kI, -kI, -1.0;
    const double scale =
        0.5 * config.lambda() * static_cast<double>(config.n_atoms());
    const Matrix h = scale * (kron(diag2(1.0, 0.0), two_photon_sum(g_term)) +
                              kron(diag2(0.0, 1.0), two_photon_sum(gp_term)));
    return Operator(layout::collective(), h);
}

Operator u_eff_exact(const EnsembleConfig &config, PhotonBasis basis) {
    const double scale = config.lambda() * static_cast<double>(config.n_atoms());
    return expm_hermitian(build_h_eff(config, basis), config.theta(), scale);
}

Matrix atom_photon_term() {
    return kron(diag2(1.0, 0.0), to_linear(diag2(1.0, 0.0))) +
           kron(diag2(0.0, 1.0), to_linear(diag2(0.0, 1.0)));
}

// Declared polarizer map -----------------------------------------------------

Vector2 PaperPolarizerMap::polarizer_output(int atom) {
    const double r = 1.0 / std::sqrt(2.0);
    return atom == 0 ? Vector2(-kI * r, r) : Vector2(kI * r, r);
}

namespace {

Complex claimed_phase(int atom, int p1, int p2, double theta) {
    const Complex e = std::polar(1.0, -theta);
    if (p1 == p2) {
        return p1 == 0 ? -e : e;
    }
    // Mixed rows carry -i on |0>_A and the mirrored +i on |1>_A.
    return (atom == 0 ? -kI : kI) * e;
}

} // namespace

PaperPolarizerMap::PaperPolarizerMap(double theta)
    : theta_(theta), m_(Matrix::Zero(8, 8)) {
    if (!std::isfinite(theta)) {
        fail(ErrorKind::InvalidArgument, "theta must be finite");
    }
    for (int a = 0; a < 2; ++a) {
        const Vector2 w = polarizer_output(a);
        const Vector pol = kron(w, w);
        for (int p1 = 0; p1 < 2; ++p1) {
            for (int p2 = 0; p2 < 2; ++p2) {
                const int col = a * 4 + p1 * 2 + p2;
                m_.block(a * 4, col, 4, 1) = claimed_phase(a, p1, p2, theta) * pol;
            }
        }
    }
}

StateVector PaperPolarizerMap::row(int atom, int p1, int p2) const {
    if (atom < 0 || atom > 1 || p1 < 0 || p1 > 1 || p2 < 0 || p2 > 1) {
        fail(ErrorKind::InvalidArgument, "row index out of range");
    }
    const Eigen::Index col = atom * 4 + p1 * 2 + p2;
    return StateVector(layout::collective(), m_.col(col));
}

PaperMapResult PaperPolarizerMap::apply(const StateVector &state) const {
    if (state.dim() != 8) {
        fail(ErrorKind::InvalidArgument,
             "claimed map acts on the 8-dim collective model, got " +
                 state.space().describe());
    }
    std::vector<std::string> warnings;
    constexpr double kZero = 1e-14;
    int populated_branches = 0;
    for (int a = 0; a < 2; ++a) {
        int nonzero = 0;
        for (int p = 0; p < 4; ++p) {
            if (std::abs(state[static_cast<std::size_t>(a * 4 + p)]) > kZero) {
                ++nonzero;
            }
        }
        populated_branches += nonzero > 0;
        if (nonzero > 1) {
            warnings.push_back(
                "claimed map defined on basis rows only; superposed photon "
                "input resolved by linear extension, which is not "
                "norm-preserving");
        }
    }
    if (populated_branches > 1) {
        warnings.push_back("atoms in a superposition of |0>_A and |1>_A; "
                           "both row families applied by linearity");
    }
    Vector out = m_ * state.amplitudes();
    const double p = out.squaredNorm();
    if (p < 1e-300) {
        fail(ErrorKind::Precondition,
             "claimed map annihilates this input (post-selection "
             "probability 0)");
    }
    out /= std::sqrt(p);
    return {StateVector(state.space(), std::move(out)), p, std::move(warnings)};
}

PhasesClaimReport check_phases_claim(const EnsembleConfig &config) {
    if (std::abs(config.theta() - kPi / 2) > kConstructionTol) {
        fail(ErrorKind::Precondition,
             "phase audit is defined at theta = pi/2, got " +
                 std::to_string(config.theta()));
    }
    const PaperPolarizerMap map(config.theta());
    const Operator exact = u_eff_exact(config);
    constexpr std::array<std::array<int, 2>, 4> rows = {
        {{0, 0}, {1, 1}, {0, 1}, {1, 0}}};

    PhasesClaimReport r;
    std::vector<StateVector> in, claimed, evolved;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto [p1, p2] = rows[i];
        r.row_labels[i] =
            "|0>_A|" + std::to_string(p1) + "," + std::to_string(p2) + ">";
        in.push_back(StateVector::basis(
            layout::collective(),
            {0, static_cast<std::size_t>(p1), static_cast<std::size_t>(p2)}));
        claimed.push_back(map.row(0, p1, p2));
        evolved.push_back(exact.apply(in.back()));
        r.row_fidelity[i] = std::abs(claimed.back().amplitudes().dot(
            evolved.back().amplitudes()));
    }
    auto gram = [](const std::vector<StateVector> &vs) {
        Matrix g(4, 4);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                g(i, j) = vs[static_cast<std::size_t>(i)].amplitudes().dot(
                    vs[static_cast<std::size_t>(j)].amplitudes());
            }
        }
        return g;
    };
    r.input_gram = gram(in);
    r.claimed_gram = gram(claimed);
    r.exact_gram = gram(evolved);
    const Matrix id = Matrix::Identity(4, 4);
    r.input_gram_deviation = max_abs_diff(r.input_gram, id);
    r.exact_gram_deviation = max_abs_diff(r.exact_gram, id);
    r.claimed_overlap_deviation =
        (r.claimed_gram.cwiseAbs().array() - 1.0).abs().maxCoeff();
    r.claim_unitary =
        max_abs_diff(r.claimed_gram, r.input_gram) <= kConstructionTol;
    r.verdict = r.claim_unitary ? "claimed map preserves inner products"
                                : "claimed map not unitary";
    return r;
}

// Steps ----------------------------------------------------------------------

std::string describe(const SimStep &step) {
    struct Visitor {
        std::string operator()(const PhotonGate &g) const {
            return (g.label.empty() ? std::string("gate") : g.label) +
                   " on photon" + std::to_string(g.photon);
        }
        std::string operator()(const AtomRotation &r) const {
            return (r.label.empty() ? std::string("rotation") : r.label) +
                   " on every atom";
        }
        std::string operator()(const EnsembleEvolution &e) const {
            return "exact evolution, theta=" + std::to_string(e.theta);
        }
        std::string operator()(const PaperEvolution &e) const {
            return "claimed polarizer map, theta=" + std::to_string(e.theta);
        }
    };
    return std::visit(Visitor{}, step);
}

} // namespace djsim::ensemble
