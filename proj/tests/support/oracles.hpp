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

// Test-only reference computations. Nothing here calls into djsim: every
// matrix is written out from its closed form, Kronecker products are plain
// loops, exponentials go through Eigen's Pade-based MatrixExponential, and
// the many-atom dynamics are simulated on a bare qubit register.

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using C = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr C kI{0.0, 1.0};

Mat mat2(C a, C b, C c, C d);
Mat identity(Eigen::Index n);

/// Hadamard variants with their written-out entries, i in 1..4.
Mat hadamard(int i);
/// Quarter- and half-wave plates from their trigonometric closed forms.
Mat quarter_wave(double phi);
Mat half_wave(double phi);
/// cos(area) I + i sin(area) (e^{i phase}|1><0| + e^{-i phase}|0><1|).
Mat microwave(double area, double phase);
/// diag(e^{i pi/4}, e^{-i pi/4}) and its conjugate.
Mat h_prime();
Mat h_double_prime();

/// Columns are the circular modes |+>, |-> written in the linear basis:
/// |+> = (|0> + i|1>)/sqrt2, |-> = (|0> - i|1>)/sqrt2.
Mat circular_in_linear();
Mat projector_plus();  ///< onto |+>, linear basis
Mat projector_minus(); ///< onto |->, linear basis

Mat kron(const Mat &a, const Mat &b);
Vec kron(const Vec &a, const Vec &b);

/// Collective-model Hamiltonian on (atom, photon1, photon2) in units of
/// lambda N, photons in the linear basis.
Mat collective_hamiltonian();
/// exp(-i theta H) by scaling and squaring, not by diagonalization.
Mat expm_minus_i(const Mat &h, double theta);

double max_abs(const Mat &m);
/// max |a - b| after removing the global phase of <a|b>.
double phase_free_distance(const Vec &a, const Vec &b);

/// A register of n qubits, qubit 0 most significant.
class Register {
  public:
    explicit Register(int n_qubits);
    Register(int n_qubits, Vec amps);
    void set_basis(std::uint64_t index);
    void apply(const Mat &u, int qubit);
    [[nodiscard]] int qubits() const { return n_; }
    [[nodiscard]] const Vec &amps() const { return amps_; }

  private:
    int n_;
    Vec amps_;
};

/// Evolution under the per-atom, per-photon dispersive sum for n atoms
/// occupying qubits 0..n-1 and photons on qubits n, n+1, with total angle
/// theta = lambda N t.
void dispersive_evolution(Register &r, int n_atoms, double theta);

/// Two-bit protocol with atoms evolving under the exact dispersive sum.
/// Atoms start in |g'>^n, photons in |0,0>. Returns the final register.
Register exact_protocol(const std::vector<int> &table, int n_atoms);

/// Photon pattern distribution (photon1 bit, photon2 bit).
std::map<std::pair<int, int>, double> photon_patterns(const Register &r,
                                                      int n_atoms);

/// Photon reduced density matrix, 4x4, linear basis.
Mat photon_density(const Register &r, int n_atoms);

/// Probability that the system register reads all zeros in the textbook
/// circuit: |2^-n sum_x (-1)^f(x)|^2.
double dj_zero_probability(const std::vector<int> &table);

/// Every table on n bits that is constant or balanced, found by brute force
/// over all 2^(2^n) tables.
std::vector<std::vector<int>> constant_or_balanced(int n_bits);

std::uint64_t binomial(int n, int k);

} // namespace oracle
