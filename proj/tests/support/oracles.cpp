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

#include "oracles.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace oracle {

namespace {
const double kR = 1.0 / std::sqrt(2.0);
} // namespace

Mat mat2(C a, C b, C c, C d) {
    Mat m(2, 2);
    m << a, b, c, d;
    return m;
}

Mat identity(Eigen::Index n) { return Mat::Identity(n, n); }

Mat hadamard(int i) {
    switch (i) {
    case 1:
        return kR * mat2(1, -1, 1, 1);
    case 2:
        return kR * mat2(1, kI, kI, 1);
    case 3:
        return kR * mat2(1, 1, -1, 1);
    case 4:
        return kR * mat2(1, -kI, -kI, 1);
    default:
        throw std::invalid_argument("hadamard index");
    }
}

Mat quarter_wave(double phi) {
    const double c = std::cos(2 * phi);
    const double s = std::sin(2 * phi);
    return (kI * kR) * mat2(c - kI, s, s, -c - kI);
}

Mat half_wave(double phi) {
    const double c = std::cos(2 * phi);
    const double s = std::sin(2 * phi);
    return kI * mat2(c, s, s, -c);
}

Mat microwave(double area, double phase) {
    const C up = std::exp(kI * phase);
    return std::cos(area) * identity(2) +
           kI * std::sin(area) * mat2(0, std::conj(up), up, 0);
}

Mat h_prime() {
    return mat2(std::exp(kI * (kPi / 4)), 0, 0, std::exp(-kI * (kPi / 4)));
}

Mat h_double_prime() { return h_prime().conjugate(); }

Mat circular_in_linear() { return kR * mat2(1, 1, kI, -kI); }

Mat projector_plus() {
    const Vec v = circular_in_linear().col(0);
    return v * v.adjoint();
}

Mat projector_minus() {
    const Vec v = circular_in_linear().col(1);
    return v * v.adjoint();
}

Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            for (Eigen::Index k = 0; k < b.rows(); ++k) {
                for (Eigen::Index l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

Vec kron(const Vec &a, const Vec &b) {
    Vec out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        for (Eigen::Index k = 0; k < b.size(); ++k) {
            out(i * b.size() + k) = a(i) * b(k);
        }
    }
    return out;
}

Mat collective_hamiltonian() {
    Mat g = Mat::Zero(2, 2);
    g(0, 0) = 1;
    Mat e = Mat::Zero(2, 2);
    e(1, 1) = 1;
    const Mat i2 = identity(2);
    const Mat pp = kron(projector_plus(), i2) + kron(i2, projector_plus());
    const Mat pm = kron(projector_minus(), i2) + kron(i2, projector_minus());
    return kron(g, pp) + kron(e, pm);
}

Mat expm_minus_i(const Mat &h, double theta) {
    const Mat a = (-kI * theta) * h;
    return a.exp();
}

double max_abs(const Mat &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double phase_free_distance(const Vec &a, const Vec &b) {
    const C ov = a.dot(b);
    const C phase = std::abs(ov) > 0 ? ov / std::abs(ov) : C(1.0);
    return max_abs(a * phase - b);
}

Register::Register(int n_qubits)
    : n_(n_qubits), amps_(Vec::Zero(Eigen::Index{1} << n_qubits)) {
    amps_(0) = 1.0;
}

Register::Register(int n_qubits, Vec amps) : n_(n_qubits), amps_(std::move(amps)) {
    if (amps_.size() != (Eigen::Index{1} << n_qubits)) {
        throw std::invalid_argument("register size");
    }
}

void Register::set_basis(std::uint64_t index) {
    amps_.setZero();
    amps_(static_cast<Eigen::Index>(index)) = 1.0;
}

void Register::apply(const Mat &u, int qubit) {
    const Eigen::Index bit = Eigen::Index{1} << (n_ - 1 - qubit);
    for (Eigen::Index i = 0; i < amps_.size(); ++i) {
        if ((i & bit) != 0) {
            continue;
        }
        const C a0 = amps_(i);
        const C a1 = amps_(i | bit);
        amps_(i) = u(0, 0) * a0 + u(0, 1) * a1;
        amps_(i | bit) = u(1, 0) * a0 + u(1, 1) * a1;
    }
}

void dispersive_evolution(Register &r, int n_atoms, double theta) {
    const Mat to_circ = circular_in_linear().adjoint();
    r.apply(to_circ, n_atoms);
    r.apply(to_circ, n_atoms + 1);
    Vec amps = r.amps();
    const double per_pair = theta / n_atoms;
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
        const auto idx = static_cast<std::uint64_t>(i);
        const int c1 = static_cast<int>((idx >> 1) & 1);
        const int c2 = static_cast<int>(idx & 1);
        const std::uint64_t atoms = idx >> 2;
        const int excited = std::popcount(atoms);
        const int ground = n_atoms - excited;
        // |g> pairs with |+> (circular 0), |g'> with |-> (circular 1).
        int couplings = 0;
        for (const int c : {c1, c2}) {
            couplings += c == 0 ? ground : excited;
        }
        amps(i) *= std::exp(-kI * (per_pair * couplings));
    }
    r = Register(r.qubits(), std::move(amps));
    r.apply(to_circ.adjoint(), n_atoms);
    r.apply(to_circ.adjoint(), n_atoms + 1);
}

Register exact_protocol(const std::vector<int> &table, int n_atoms) {
    if (table.size() != 4) {
        throw std::invalid_argument("two-bit table expected");
    }
    Register r(n_atoms + 2);
    r.set_basis(((std::uint64_t{1} << n_atoms) - 1) << 2);
    const Mat h1 = hadamard(1);
    r.apply(h1, n_atoms);
    r.apply(h1, n_atoms + 1);
    for (int j = 0; j < n_atoms; ++j) {
        r.apply(h1, j);
    }
    const int ones = table[0] + table[1] + table[2] + table[3];
    if (ones == 4) {
        for (int j = 0; j < n_atoms; ++j) {
            r.apply(microwave(kPi / 2, kPi / 2), j);
        }
    } else if (ones == 2) {
        for (int j = 0; j < n_atoms; ++j) {
            r.apply(h1, j);
        }
        dispersive_evolution(r, n_atoms, kPi / 2);
        // h' = h1 h4 h3 and h'' = h1 h2 h3, assigned per function pair.
        const Mat hp = hadamard(1) * hadamard(4) * hadamard(3);
        const Mat hpp = hadamard(1) * hadamard(2) * hadamard(3);
        const bool pair34 = table == std::vector<int>{0, 0, 1, 1} ||
                            table == std::vector<int>{1, 1, 0, 0};
        const bool pair56 = table == std::vector<int>{0, 1, 0, 1} ||
                            table == std::vector<int>{1, 0, 1, 0};
        r.apply(pair56 ? hp : hpp, n_atoms);
        r.apply(pair34 ? hp : hpp, n_atoms + 1);
    } else if (ones != 0) {
        throw std::invalid_argument("neither constant nor balanced");
    }
    r.apply(h1, n_atoms);
    r.apply(h1, n_atoms + 1);
    return r;
}

std::map<std::pair<int, int>, double> photon_patterns(const Register &r,
                                                      int n_atoms) {
    (void)n_atoms;
    std::map<std::pair<int, int>, double> out;
    for (Eigen::Index i = 0; i < r.amps().size(); ++i) {
        const int p1 = static_cast<int>((i >> 1) & 1);
        const int p2 = static_cast<int>(i & 1);
        out[{p1, p2}] += std::norm(r.amps()(i));
    }
    return out;
}

Mat photon_density(const Register &r, int n_atoms) {
    Mat rho = Mat::Zero(4, 4);
    const Eigen::Index blocks = Eigen::Index{1} << n_atoms;
    for (Eigen::Index a = 0; a < blocks; ++a) {
        const Vec v = r.amps().segment(4 * a, 4);
        rho += v * v.adjoint();
    }
    return rho;
}

double dj_zero_probability(const std::vector<int> &table) {
    double s = 0.0;
    for (const int v : table) {
        s += v == 0 ? 1.0 : -1.0;
    }
    s /= static_cast<double>(table.size());
    return s * s;
}

std::vector<std::vector<int>> constant_or_balanced(int n_bits) {
    const int len = 1 << n_bits;
    std::vector<std::vector<int>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
        const int ones = std::popcount(mask);
        if (ones != 0 && ones != len && ones != len / 2) {
            continue;
        }
        std::vector<int> t(static_cast<std::size_t>(len));
        for (int x = 0; x < len; ++x) {
            t[static_cast<std::size_t>(x)] =
                static_cast<int>((mask >> (len - 1 - x)) & 1);
        }
        out.push_back(std::move(t));
    }
    return out;
}

std::uint64_t binomial(int n, int k) {
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

} // namespace oracle
