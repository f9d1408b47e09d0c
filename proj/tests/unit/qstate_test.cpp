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
#include <random>

#include <gtest/gtest.h>

#include "djsim/error.hpp"
#include "djsim/layout.hpp"
#include "djsim/optics.hpp"
#include "djsim/qstate.hpp"
#include "oracles.hpp"

namespace djsim {
namespace {

SpaceLabel qubit(const std::string &name) { return SpaceLabel::single(name, 2); }

Vector random_state(std::mt19937_64 &rng, Eigen::Index dim) {
    std::normal_distribution<double> g;
    Vector v(dim);
    for (auto &a : v) {
        a = Complex(g(rng), g(rng));
    }
    return v / v.norm();
}

Matrix random_hermitian(std::mt19937_64 &rng, Eigen::Index dim) {
    std::normal_distribution<double> g;
    Matrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            m(i, j) = Complex(g(rng), g(rng));
        }
    }
    return (m + m.adjoint()) / 2.0;
}

TEST(SpaceLabel, DimensionIsProductOfSubsystemDims) {
    const SpaceLabel s({{"a", 3}, {"b", 2}, {"c", 5}});
    EXPECT_EQ(s.dim(), 30u);
    EXPECT_EQ(s.stride(0), 10u);
    EXPECT_EQ(s.stride(2), 1u);
    const std::vector<std::size_t> d = {2, 1, 4};
    EXPECT_EQ(s.index(d), 2u * 10 + 1 * 5 + 4);
    EXPECT_EQ(s.digits(29), d);
}

TEST(SpaceLabel, RejectsDuplicateNames) {
    EXPECT_THROW(SpaceLabel({{"a", 2}, {"a", 2}}), Error);
    EXPECT_THROW(qubit("a").concat(qubit("a")), Error);
}

TEST(StateVector, NormalizedFlagIsEnforced) {
    Vector v(2);
    v << 1.0, 1.0;
    EXPECT_THROW(StateVector(qubit("q"), v), Error);
    EXPECT_NO_THROW(StateVector(qubit("q"), v, false));
    EXPECT_NEAR(StateVector(qubit("q"), v, false).renormalized().norm(), 1.0, 1e-15);
}

TEST(Operator, UnitaryClaimIsChecked) {
    Matrix m(2, 2);
    m << 1.0, 1.0, 0.0, 1.0;
    EXPECT_THROW(Operator(qubit("q"), m, true), Error);
    EXPECT_NO_THROW(Operator(qubit("q"), m));
}

TEST(Tensor, BasisKetsAndIdentities) {
    const StateVector s = tensor(StateVector::basis(qubit("a"), {0}),
                                 StateVector::basis(qubit("b"), {1}));
    Vector expect = Vector::Zero(4);
    expect(1) = 1.0;
    EXPECT_LT(max_abs_diff(s.amplitudes(), expect), 1e-15);
    EXPECT_LT(max_abs_diff(kron(Matrix::Identity(2, 2), Matrix::Identity(2, 2)),
                           Matrix::Identity(4, 4)),
              1e-15);
}

TEST(Tensor, HadamardPairOnZeroZero) {
    const Operator h1a(qubit("a"), oracle::hadamard(1), true);
    const Operator h1b(qubit("b"), oracle::hadamard(1), true);
    const StateVector s = tensor(h1a, h1b).apply(
        StateVector::basis(qubit("a").concat(qubit("b")), {0, 0}));
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(std::abs(s[i] - Complex(0.5)), 0.0, 1e-15);
    }
}

TEST(Tensor, KronMatchesOracleAndIsAssociative) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix a = random_hermitian(rng, 2);
        const Matrix b = random_hermitian(rng, 3);
        const Matrix c = random_hermitian(rng, 2);
        EXPECT_LT(max_abs_diff(kron(a, b), oracle::kron(a, b)), 1e-15);
        EXPECT_LT(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))), 1e-15);
    }
}

TEST(Embed, FlipOnSecondPhoton) {
    Matrix x(2, 2);
    x << 0, 1, 1, 0;
    const SpaceLabel space = layout::collective();
    const Operator e = embed(Operator(qubit(layout::kPhoton2), x, true),
                             {layout::kPhoton2}, space);
    const StateVector out = e.apply(StateVector::basis(space, {0, 0, 0}));
    EXPECT_NEAR(std::abs(out[space.index(std::vector<std::size_t>{0, 0, 1})]), 1.0, 1e-15);
}

TEST(Embed, IdentityStaysIdentity) {
    const SpaceLabel space = layout::collective();
    const Operator e = embed(Operator::identity(qubit(layout::kPhoton1)),
                             {layout::kPhoton1}, space);
    EXPECT_LT(max_abs_diff(e.matrix(), Matrix::Identity(8, 8)), 1e-15);
}

TEST(Embed, DoublePrimeOnFirstPhoton) {
    const SpaceLabel space = layout::photons();
    const Operator hpp(qubit(layout::kPhoton1), oracle::h_double_prime(), true);
    const StateVector out =
        embed(hpp, {layout::kPhoton1}, space).apply(StateVector::basis(space, {0, 0}));
    EXPECT_NEAR(std::abs(out[0] - std::exp(Complex(0, -oracle::kPi / 4))), 0.0, 1e-15);
}

TEST(Embed, ReorderedTargetsMatchOracleKron) {
    // Two-body operator on (photon2, atoms) must land on the right digits.
    std::mt19937_64 rng(3);
    const Matrix m = random_hermitian(rng, 4);
    const SpaceLabel pair({{layout::kPhoton2, 2}, {layout::kAtoms, 2}});
    const Matrix got = embed(Operator(pair, m), {layout::kPhoton2, layout::kAtoms},
                             layout::collective())
                           .matrix();
    // Oracle: permute (p2, a) -> (a, p2), then pad photon1 in the middle.
    Matrix swapped(4, 4);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            const int rs = ((r & 1) << 1) | (r >> 1);
            const int cs = ((c & 1) << 1) | (c >> 1);
            swapped(rs, cs) = m(r, c);
        }
    }
    Matrix expect = Matrix::Zero(8, 8);
    for (int r = 0; r < 8; ++r) {
        for (int c = 0; c < 8; ++c) {
            if (((r >> 1) & 1) != ((c >> 1) & 1)) {
                continue;
            }
            const int rr = ((r >> 2) << 1) | (r & 1);
            const int cc = ((c >> 2) << 1) | (c & 1);
            expect(r, c) = swapped(rr, cc);
        }
    }
    EXPECT_LT(max_abs_diff(got, expect), 1e-15);
}

TEST(Embed, UnknownNameAndDimensionMismatchThrow) {
    const Operator op = Operator::identity(qubit("x"));
    EXPECT_THROW((void)embed(op, {"nope"}, layout::collective()), Error);
    EXPECT_THROW((void)embed(Operator::identity(SpaceLabel::single("x", 3)),
                             {layout::kPhoton1}, layout::collective()),
                 Error);
}

TEST(ExpmHermitian, DiagonalAndZeroAngle) {
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 1.0;
    const Operator u = expm_hermitian(Operator(qubit("q"), d), oracle::kPi / 2);
    EXPECT_NEAR(std::abs(u.matrix()(0, 0) - Complex(0, -1)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(u.matrix()(1, 1) - Complex(1)), 0.0, 1e-15);
    std::mt19937_64 rng(11);
    const Operator z = expm_hermitian(Operator(qubit("q"), random_hermitian(rng, 2)), 0.0);
    EXPECT_LT(max_abs_diff(z.matrix(), Matrix::Identity(2, 2)), 1e-14);
}

TEST(ExpmHermitian, MicrowaveCouplingGivesH2) {
    // H = -(|1><0| + |0><1|) at area pi/4 is the phase-0 pulse.
    Matrix h(2, 2);
    h << 0, -1, -1, 0;
    const Operator u = expm_hermitian(Operator(qubit("q"), h), oracle::kPi / 4);
    EXPECT_LT(max_abs_diff(u.matrix(), oracle::hadamard(2)), 1e-12);
}

TEST(ExpmHermitian, RejectsNonHermitian) {
    Matrix m(2, 2);
    m << 0, 1, 0, 0;
    EXPECT_THROW((void)expm_hermitian(Operator(qubit("q"), m), 1.0), Error);
}

TEST(ExpmHermitianProperty, MatchesPadeOracleAndGroupLaw) {
    std::mt19937_64 rng(2026);
    std::uniform_real_distribution<double> angle(-4.0, 4.0);
    const SpaceLabel space({{"a", 2}, {"b", 3}});
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix h = random_hermitian(rng, 6);
        const double t1 = angle(rng);
        const double t2 = angle(rng);
        const Operator op(space, h);
        const Operator u1 = expm_hermitian(op, t1);
        const Operator u2 = expm_hermitian(op, t2);
        const Operator u12 = expm_hermitian(op, t1 + t2);
        EXPECT_LT(max_abs_diff(u1.matrix(), oracle::expm_minus_i(h, t1)), 1e-12);
        EXPECT_LT(max_abs_diff((u1 * u2).matrix(), u12.matrix()), 1e-12);
        EXPECT_LT(u1.unitarity_deviation(), 1e-12);
    }
}

TEST(Born, EqualSuperpositionAndPhotonPair) {
    Vector v(2);
    v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    const auto d = born_distribution(StateVector(qubit("q"), v), {"q"});
    EXPECT_NEAR(d.at({0}), 0.5, 1e-15);
    EXPECT_NEAR(d.at({1}), 0.5, 1e-15);
    const auto pair = born_distribution(StateVector::basis(layout::photons(), {1, 1}),
                                        {layout::kPhoton1, layout::kPhoton2});
    EXPECT_NEAR(pair.at({1, 1}), 1.0, 1e-15);
}

TEST(Born, UnnormalizedNeedsExplicitRenormalize) {
    Vector v(2);
    v << 1.0, 1.0;
    const StateVector s(qubit("q"), v, false);
    EXPECT_THROW((void)born_distribution(s, {"q"}), Error);
    EXPECT_NEAR(born_distribution(s, {"q"}, true).at({1}), 0.5, 1e-15);
}

TEST(BornProperty, SumsToOneAndMarginalizes) {
    std::mt19937_64 rng(5);
    const SpaceLabel space({{"a", 2}, {"b", 3}, {"c", 2}});
    for (int trial = 0; trial < 100; ++trial) {
        const StateVector s(space, random_state(rng, 12));
        for (const auto &kept : std::vector<std::vector<std::string>>{
                 {"a"}, {"b", "c"}, {"c", "a"}, {"a", "b", "c"}}) {
            double total = 0.0;
            for (const auto &[o, p] : born_distribution(s, kept)) {
                EXPECT_GE(p, 0.0);
                total += p;
            }
            EXPECT_NEAR(total, 1.0, 1e-12);
        }
        // Marginal of c from the oracle-side sum over a and b.
        double pc1 = 0.0;
        for (Eigen::Index i = 0; i < 12; ++i) {
            if ((i & 1) == 1) {
                pc1 += std::norm(s.amplitudes()(i));
            }
        }
        EXPECT_NEAR(born_distribution(s, {"c"}).at({1}), pc1, 1e-14);
    }
}

TEST(ReducedDensity, ProductStateFactor) {
    std::mt19937_64 rng(8);
    const Vector a = random_state(rng, 2);
    const Vector b = random_state(rng, 4);
    const StateVector s(qubit("a").concat(layout::photons()), oracle::kron(a, b));
    const Matrix rho = reduced_density(s, {layout::kPhoton1, layout::kPhoton2});
    EXPECT_LT(max_abs_diff(rho, b * b.adjoint()), 1e-14);
}

TEST(GlobalPhase, Examples) {
    const StateVector zero = StateVector::basis(qubit("q"), {0});
    Vector v(2);
    v << std::exp(Complex(0, oracle::kPi / 4)), 0.0;
    const auto c = equal_up_to_global_phase(zero, StateVector(qubit("q"), v));
    EXPECT_TRUE(c.equal);
    EXPECT_NEAR(c.phase, oracle::kPi / 4, 1e-15);
    EXPECT_FALSE(equal_up_to_global_phase(zero, StateVector::basis(qubit("q"), {1})).equal);

    const StateVector hp0(qubit("q"), oracle::h_prime() * zero.amplitudes());
    const auto p = equal_up_to_global_phase(zero, hp0);
    EXPECT_TRUE(p.equal);
    EXPECT_NEAR(p.phase, oracle::kPi / 4, 1e-15);
}

TEST(GlobalPhase, DimensionMismatchThrows) {
    EXPECT_THROW((void)equal_up_to_global_phase(StateVector::basis(qubit("q"), {0}),
                                                StateVector::basis(layout::photons(), {0, 0})),
                 Error);
}

} // namespace
} // namespace djsim
