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
#include <random>

#include <gtest/gtest.h>

#include "djsim/ensemble.hpp"
#include "djsim/error.hpp"
#include "djsim/layout.hpp"
#include "oracles.hpp"

namespace djsim::ensemble {
namespace {

using oracle::kI;
using oracle::kPi;

// Normalized Dicke vector with k excitations on n qubits.
oracle::Vec dicke_vector(int n, int k) {
    oracle::Vec v = oracle::Vec::Zero(Eigen::Index{1} << n);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::popcount(static_cast<unsigned>(i)) == k) {
            v(i) = 1.0;
        }
    }
    return v / v.norm();
}

oracle::Mat tensor_power(const oracle::Mat &u, int n) {
    oracle::Mat out = oracle::identity(1);
    for (int j = 0; j < n; ++j) {
        out = oracle::kron(out, u);
    }
    return out;
}

oracle::Mat random_unitary(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> a(-kPi, kPi);
    const oracle::C off(a(rng), a(rng));
    return oracle::expm_minus_i(oracle::mat2(a(rng), off, std::conj(off), a(rng)), 1.0);
}

TEST(Config, ThetaAndWarnings) {
    const EnsembleConfig c = EnsembleConfig::physical(10, 2.0, 40.0, 0.5);
    EXPECT_DOUBLE_EQ(c.lambda(), 0.1);
    EXPECT_DOUBLE_EQ(c.theta(), 0.5);
    EXPECT_TRUE(c.warnings().empty());
    EXPECT_FALSE(EnsembleConfig::physical(1, 1.0, 2.0, 1.0).warnings().empty());
    EXPECT_THROW((void)EnsembleConfig::physical(0, 1.0, 1.0, 1.0), Error);
    EXPECT_THROW((void)EnsembleConfig::physical(1, -1.0, 1.0, 1.0), Error);
    EXPECT_NEAR(EnsembleConfig::with_theta(1000, kPi / 2).theta(), kPi / 2, 1e-15);
}

TEST(Microwave, PulsesGiveTheFourHadamards) {
    const double phases[] = {-kPi / 2, 0.0, kPi / 2, kPi};
    for (int i = 1; i <= 4; ++i) {
        const Operator u = microwave_rotation(MicrowavePulse::hadamard(i));
        EXPECT_LT(max_abs_diff(u.matrix(), oracle::hadamard(i)), 1e-12) << i;
        EXPECT_LT(max_abs_diff(u.matrix(),
                               oracle::microwave(kPi / 4, phases[i - 1])),
                  1e-12);
    }
}

TEST(Microwave, NotPulseSwapsLevels) {
    const Operator u = microwave_rotation(MicrowavePulse::flip());
    EXPECT_LT(max_abs_diff(u.matrix(), oracle::mat2(0, 1, -1, 0)), 1e-12);
}

TEST(Microwave, RotationIsExpOfHamiltonian) {
    const MicrowavePulse p = MicrowavePulse::make(0.37, 1.2);
    const Operator h = microwave_hamiltonian(MicrowavePulse::make(1.0, 1.2));
    EXPECT_LT(max_abs_diff(microwave_rotation(p).matrix(),
                           oracle::expm_minus_i(h.matrix(), 0.37)),
              1e-12);
}

TEST(MicrowaveProperty, RandomPulsesAreUnitary) {
    std::mt19937_64 rng(100);
    std::uniform_real_distribution<double> a(-7.0, 7.0);
    for (int i = 0; i < 100; ++i) {
        const double area = a(rng);
        const double phase = a(rng);
        const Matrix u = microwave_rotation(MicrowavePulse::make(area, phase)).matrix();
        EXPECT_LT(max_abs_diff(u * u.adjoint(), Matrix::Identity(2, 2)), 1e-12);
        EXPECT_LT(max_abs_diff(u, oracle::microwave(area, phase)), 1e-12);
    }
}

TEST(Hamiltonian, CircularDiagonalElements) {
    const EnsembleConfig c = EnsembleConfig::with_theta(50, kPi / 2);
    const double ln = c.lambda() * 50;
    const Matrix h = build_h_eff(c, PhotonBasis::Circular).matrix();
    const SpaceLabel s = layout::collective();
    const auto at = [&](std::size_t a, std::size_t p1, std::size_t p2) {
        const std::vector<std::size_t> d = {a, p1, p2};
        const auto i = static_cast<Eigen::Index>(s.index(d));
        return h(i, i);
    };
    EXPECT_NEAR(std::abs(at(0, 0, 0) - 2 * ln), 0.0, 1e-12 * ln);
    EXPECT_NEAR(std::abs(at(0, 1, 1)), 0.0, 1e-12 * ln);
    EXPECT_NEAR(std::abs(at(1, 1, 1) - 2 * ln), 0.0, 1e-12 * ln);
    EXPECT_NEAR(std::abs(at(0, 0, 1) - ln), 0.0, 1e-12 * ln);
    EXPECT_LT(max_abs_diff(h, Matrix(h.diagonal().asDiagonal())), 1e-15);
}

TEST(Hamiltonian, LinearFormMatchesOracleProjectors) {
    const EnsembleConfig c = EnsembleConfig::with_theta(7, kPi / 2);
    const double ln = c.lambda() * 7;
    const Matrix oracle_h = ln * oracle::collective_hamiltonian();
    EXPECT_LT(max_abs_diff(build_h_eff(c, PhotonBasis::Linear).matrix(), oracle_h), 1e-12 * ln);
    EXPECT_LT(max_abs_diff(build_h_eff_linear_projectors(c).matrix(), oracle_h), 1e-12 * ln);
    EXPECT_LT(build_h_eff(c, PhotonBasis::Linear).hermiticity_deviation(), 1e-15);
}

TEST(Hamiltonian, PrintedLinearFormDiffersFromTheProjectorForm) {
    // The printed per-photon term (1/2)[[1, i], [i, -1]] is nilpotent and not
    // Hermitian, so it cannot be a basis change of the projector (1/2)[[1,
    // -i], [i, 1]]. Per photon the entrywise gap is exactly 1; the two
    // photon terms add up to 2 on the full operator, in units of lambda N.
    const oracle::Mat printed = 0.5 * oracle::mat2(1, kI, kI, -1);
    EXPECT_LT(oracle::max_abs(printed * printed), 1e-15);
    EXPECT_NEAR(oracle::max_abs(printed - oracle::projector_plus()), 1.0, 1e-15);

    const EnsembleConfig c = EnsembleConfig::with_theta(1, kPi / 2);
    const double ln = c.lambda();
    const Operator p = build_h_eff_printed_linear(c);
    EXPECT_GT(p.hermiticity_deviation(), 0.5 * ln);
    const double gap =
        max_abs_diff(p.matrix(), build_h_eff(c, PhotonBasis::Linear).matrix()) / ln;
    EXPECT_NEAR(gap, 2.0, 1e-12);
}

TEST(Evolution, PiOverTwoPhasesAgainstPadeOracle) {
    const EnsembleConfig c = EnsembleConfig::with_theta(3, kPi / 2);
    const Matrix u = u_eff_exact(c).matrix();
    EXPECT_LT(max_abs_diff(u, oracle::expm_minus_i(oracle::collective_hamiltonian(), kPi / 2)),
              1e-12);
    // |0>_A |+>|-> picks up e^{-i pi/2}.
    const StateVector in = optics::basis_convert(
        StateVector::basis(layout::collective(), {0, 0, 1}), PhotonBasis::Linear);
    const StateVector out = u_eff_exact(c).apply(in);
    EXPECT_LT(max_abs_diff(out.amplitudes(), Complex(0, -1) * in.amplitudes()), 1e-12);
}

TEST(Evolution, LinearZeroZeroWithGroundAtoms) {
    const EnsembleConfig c = EnsembleConfig::with_theta(1, kPi / 2);
    const StateVector out =
        u_eff_exact(c).apply(StateVector::basis(layout::collective(), {0, 0, 0}));
    // Oracle: per photon, |0> = (|+>+|->)/sqrt2, |+> acquires -i.
    const oracle::Mat v = oracle::circular_in_linear();
    const oracle::Vec photon = (Complex(0, -1) * v.col(0) + v.col(1)) / std::sqrt(2.0);
    oracle::Vec expect = oracle::Vec::Zero(8);
    expect.head(4) = oracle::kron(photon, photon);
    EXPECT_LT(max_abs_diff(out.amplitudes(), expect), 1e-12);
}

TEST(EvolutionProperty, UnitaryAndZeroAngleIdentity) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> t(0.0, 20.0);
    for (int i = 0; i < 50; ++i) {
        const EnsembleConfig c = EnsembleConfig::with_theta(1 + rng() % 1000, t(rng));
        EXPECT_LT(u_eff_exact(c).unitarity_deviation(), 1e-12);
    }
    EXPECT_LT(max_abs_diff(u_eff_exact(EnsembleConfig::with_theta(4, 0.0)).matrix(),
                           Matrix::Identity(8, 8)),
              1e-15);
}

TEST(AtomState, DickeAmplitudesMatchBinomialOracle) {
    const Vector2 spinor(Complex(0.6, 0.1), Complex(-0.2, 0.7583));
    const Vector2 unit = spinor / spinor.norm();
    for (const int n : {1, 2, 5, 9}) {
        const Vector v = coherent_dicke_amplitudes(unit, static_cast<std::uint64_t>(n));
        oracle::Vec prod = oracle::Vec::Ones(1);
        for (int j = 0; j < n; ++j) {
            prod = oracle::kron(prod, oracle::Vec(unit));
        }
        for (int k = 0; k <= n; ++k) {
            const Complex expect = dicke_vector(n, k).dot(prod);
            EXPECT_NEAR(std::abs(v(k) - expect), 0.0, 1e-13) << n << " " << k;
        }
    }
}

TEST(AtomState, DickeAmplitudesStayNormalizedAtLargeN) {
    const Vector2 s = Vector2(1.0, -1.0) / std::sqrt(2.0);
    // The rounded spinor is not exactly unit length; the product state's
    // squared norm is |s|^(2N), which drifts visibly from 1 at large N.
    for (const std::uint64_t n : {1000ull, 100000ull, 2500000ull}) {
        const double expect = std::pow(s.squaredNorm(), static_cast<double>(n));
        EXPECT_NEAR(coherent_dicke_amplitudes(s, n).squaredNorm() / expect, 1.0, 1e-12) << n;
    }
}

TEST(AtomState, CollectiveExtremesAndLifting) {
    const Vector g = AtomState::ground(4).to_dicke();
    const Vector e = AtomState::excited(4).to_dicke();
    EXPECT_NEAR(std::abs(g(0)), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(e(4)), 1.0, 1e-15);
    EXPECT_EQ(AtomState::ground(4).lifted().representation(),
              AtomState::Representation::Product);
    const AtomState mixed = AtomState::collective(4, Vector2(0.6, 0.8));
    EXPECT_EQ(mixed.lifted().representation(), AtomState::Representation::Dicke);
    EXPECT_THROW((void)AtomState::collective(4, Vector2(1.0, 1.0)), Error);
}

TEST(PerAtom, HadamardResetsMinusProductToGround) {
    const AtomState minus =
        AtomState::product(6, Vector2(1.0, -1.0) / std::sqrt(2.0));
    const AtomState out = apply_per_atom(oracle::hadamard(1), minus);
    const Vector d = out.to_dicke();
    EXPECT_NEAR(std::abs(d(0)), 1.0, 1e-12);
}

TEST(PerAtom, HadamardOnExcitedGivesMinusPlus) {
    const AtomState out = apply_per_atom(oracle::hadamard(1), AtomState::excited(5));
    const Vector expect =
        coherent_dicke_amplitudes(Vector2(-1.0, 1.0) / std::sqrt(2.0), 5);
    EXPECT_LT(max_abs_diff(out.to_dicke(), expect), 1e-12);
    EXPECT_LT(max_abs_diff(apply_per_atom(Matrix2::Identity(), AtomState::excited(5)).to_dicke(),
                           AtomState::excited(5).to_dicke()),
              1e-15);
}

TEST(SymmetricRotation, MatchesRestrictedTensorPower) {
    std::mt19937_64 rng(31);
    for (const int n : {1, 2, 3, 5}) {
        for (int trial = 0; trial < 5; ++trial) {
            const oracle::Mat u = random_unitary(rng);
            const oracle::Mat big = tensor_power(u, n);
            const Matrix got = symmetric_rotation(Matrix2(u), static_cast<std::uint64_t>(n));
            for (int r = 0; r <= n; ++r) {
                for (int c = 0; c <= n; ++c) {
                    const Complex expect = dicke_vector(n, r).dot(big * dicke_vector(n, c));
                    EXPECT_NEAR(std::abs(got(r, c) - expect), 0.0, 1e-11) << n;
                }
            }
        }
    }
}

TEST(SymmetricRotation, DickeInputRotatesLikeTheProduct) {
    std::mt19937_64 rng(32);
    const oracle::Mat u = random_unitary(rng);
    const Vector2 s = Vector2(0.8, Complex(0, 0.6));
    const AtomState as_dicke = AtomState::dicke(40, coherent_dicke_amplitudes(s, 40));
    const AtomState as_product = AtomState::product(40, s);
    EXPECT_LT(max_abs_diff(apply_per_atom(Matrix2(u), as_dicke).to_dicke(),
                           apply_per_atom(Matrix2(u), as_product).to_dicke()),
              1e-11);
}

TEST(PaperMap, RowsCarryTheDeclaredPhases) {
    const PaperPolarizerMap map(kPi / 2);
    const Vector2 out = PaperPolarizerMap::polarizer_output(0);
    const oracle::Vec pol = oracle::kron(oracle::Vec(out), oracle::Vec(out));
    const Complex e = std::exp(Complex(0, -kPi / 2));
    const struct {
        int p1, p2;
        Complex phase;
    } rows[] = {{0, 0, -e}, {1, 1, e}, {0, 1, Complex(0, -1) * e}, {1, 0, Complex(0, -1) * e}};
    for (const auto &r : rows) {
        oracle::Vec expect = oracle::Vec::Zero(8);
        expect.head(4) = r.phase * pol;
        EXPECT_LT(max_abs_diff(map.row(0, r.p1, r.p2).amplitudes(), expect), 1e-12);
    }
}

TEST(PaperMap, OutputIsCircularPlus) {
    for (int a = 0; a < 2; ++a) {
        const Vector2 out = PaperPolarizerMap::polarizer_output(a);
        const oracle::Vec target = oracle::circular_in_linear().col(a);
        EXPECT_NEAR(std::abs(target.dot(oracle::Vec(out))), 1.0, 1e-15);
    }
    // (-i|0> + |1>)/sqrt2 = -i |+>.
    const oracle::Vec plus = oracle::circular_in_linear().col(0);
    EXPECT_LT(oracle::max_abs(oracle::Vec(PaperPolarizerMap::polarizer_output(0)) +
                              kI * plus),
              1e-15);
}

TEST(PaperMap, SuperposedInputIsResolvedLinearlyWithWarning) {
    const PaperPolarizerMap map(kPi / 2);
    Vector v = Vector::Zero(8);
    v(0) = 0.5; // |0>_A |0,0>
    v(1) = 0.5;
    v(2) = 0.5;
    v(3) = 0.5;
    const PaperMapResult r = map.apply(StateVector(layout::collective(), v));
    EXPECT_FALSE(r.warnings.empty());
    // Oracle: the four claimed phases sum coherently on a common output.
    const Complex e = std::exp(Complex(0, -kPi / 2));
    const Complex amp = 0.5 * (-e + e - kI * e - kI * e);
    EXPECT_NEAR(r.post_selection_probability, std::norm(amp), 1e-12);
    EXPECT_NEAR(r.state.norm(), 1.0, 1e-12);
}

TEST(PaperMap, BasisRowIsNormPreserving) {
    const PaperPolarizerMap map(kPi / 2);
    const PaperMapResult r = map.apply(StateVector::basis(layout::collective(), {0, 1, 0}));
    EXPECT_TRUE(r.warnings.empty());
    EXPECT_NEAR(r.post_selection_probability, 1.0, 1e-12);
}

TEST(PhasesAudit, ClaimedOutputsAreParallel) {
    const PhasesClaimReport r = check_phases_claim(EnsembleConfig::with_theta(1, kPi / 2));
    EXPECT_LT(max_abs_diff(r.input_gram, Matrix::Identity(4, 4)), 1e-12);
    EXPECT_LT(max_abs_diff(Matrix(r.claimed_gram.cwiseAbs().cast<Complex>()),
                           Matrix::Ones(4, 4)),
              1e-12);
    EXPECT_LT(r.exact_gram_deviation, 1e-12);
    EXPECT_FALSE(r.claim_unitary);
    EXPECT_EQ(r.verdict, "claimed map not unitary");
    EXPECT_THROW((void)check_phases_claim(EnsembleConfig::with_theta(1, 1.0)), Error);
}

TEST(PhasesAudit, RowFidelitiesAgainstOracle) {
    const PhasesClaimReport r = check_phases_claim(EnsembleConfig::with_theta(1, kPi / 2));
    const oracle::Mat u = oracle::expm_minus_i(oracle::collective_hamiltonian(), kPi / 2);
    const PaperPolarizerMap map(kPi / 2);
    const int rows[4][2] = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
    for (int i = 0; i < 4; ++i) {
        oracle::Vec in = oracle::Vec::Zero(8);
        in(2 * rows[i][0] + rows[i][1]) = 1.0;
        const oracle::Vec exact = u * in;
        const double f = std::abs(map.row(0, rows[i][0], rows[i][1]).amplitudes().dot(exact));
        EXPECT_NEAR(r.row_fidelity[static_cast<std::size_t>(i)], f, 1e-12);
    }
}

TEST(AtomPhotonTerm, IsTheOracleCoupling) {
    const oracle::Mat g = oracle::mat2(1, 0, 0, 0);
    const oracle::Mat e = oracle::mat2(0, 0, 0, 1);
    const oracle::Mat t =
        oracle::kron(g, oracle::projector_plus()) + oracle::kron(e, oracle::projector_minus());
    EXPECT_LT(max_abs_diff(atom_photon_term(), t), 1e-15);
}

} // namespace
} // namespace djsim::ensemble
