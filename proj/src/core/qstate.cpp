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

#include "djsim/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "djsim/error.hpp"

namespace djsim {

namespace {

bool all_finite(const Matrix &m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            const Complex z = m(i, j);
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::size_t> positions_of(const SpaceLabel &space,
                                      const std::vector<std::string> &names) {
    std::vector<std::size_t> out;
    out.reserve(names.size());
    for (const auto &n : names) {
        out.push_back(space.position(n));
    }
    std::set<std::size_t> uniq(out.begin(), out.end());
    if (uniq.size() != out.size()) {
        fail(ErrorKind::InvalidArgument, "subsystem named twice in target list");
    }
    return out;
}

} // namespace

// SpaceLabel ----------------------------------------------------------------

SpaceLabel::SpaceLabel(std::vector<Subsystem> subsystems)
    : subsystems_(std::move(subsystems)) {
    std::set<std::string> names;
    dim_ = 1;
    for (const auto &s : subsystems_) {
        if (s.dim == 0) {
            fail(ErrorKind::InvalidArgument,
                 "subsystem '" + s.name + "' has dimension 0");
        }
        if (!names.insert(s.name).second) {
            fail(ErrorKind::InvalidArgument,
                 "duplicate subsystem name '" + s.name + "'");
        }
        dim_ *= s.dim;
    }
}

SpaceLabel SpaceLabel::single(std::string name, std::size_t dim) {
    return SpaceLabel({Subsystem{std::move(name), dim}});
}

std::optional<std::size_t> SpaceLabel::find(std::string_view name) const {
    for (std::size_t i = 0; i < subsystems_.size(); ++i) {
        if (subsystems_[i].name == name) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t SpaceLabel::position(std::string_view name) const {
    if (auto p = find(name)) {
        return *p;
    }
    fail(ErrorKind::InvalidArgument, "unknown subsystem '" + std::string(name) +
                                         "' in " + describe());
}

SpaceLabel SpaceLabel::concat(const SpaceLabel &other) const {
    std::vector<Subsystem> all = subsystems_;
    for (const auto &s : other.subsystems_) {
        if (find(s.name)) {
            fail(ErrorKind::InvalidArgument,
                 "subsystem name collision on '" + s.name + "'");
        }
        all.push_back(s);
    }
    return SpaceLabel(std::move(all));
}

std::vector<std::size_t> SpaceLabel::digits(std::size_t index) const {
    std::vector<std::size_t> d(subsystems_.size());
    for (std::size_t i = subsystems_.size(); i-- > 0;) {
        d[i] = index % subsystems_[i].dim;
        index /= subsystems_[i].dim;
    }
    return d;
}

std::size_t SpaceLabel::index(std::span<const std::size_t> digits) const {
    if (digits.size() != subsystems_.size()) {
        fail(ErrorKind::InvalidArgument, "digit count does not match space");
    }
    std::size_t idx = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] >= subsystems_[i].dim) {
            fail(ErrorKind::InvalidArgument,
                 "digit out of range for '" + subsystems_[i].name + "'");
        }
        idx = idx * subsystems_[i].dim + digits[i];
    }
    return idx;
}

std::size_t SpaceLabel::stride(std::size_t i) const {
    std::size_t s = 1;
    for (std::size_t j = i + 1; j < subsystems_.size(); ++j) {
        s *= subsystems_[j].dim;
    }
    return s;
}

std::string SpaceLabel::describe() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < subsystems_.size(); ++i) {
        os << (i ? " x " : "") << subsystems_[i].name << "("
           << subsystems_[i].dim << ")";
    }
    return os.str();
}

// StateVector ---------------------------------------------------------------

StateVector::StateVector(SpaceLabel space, Vector amplitudes, bool normalized)
    : space_(std::move(space)), amplitudes_(std::move(amplitudes)),
      normalized_(normalized) {
    if (static_cast<std::size_t>(amplitudes_.size()) != space_.dim()) {
        fail(ErrorKind::InvalidArgument,
             "amplitude count " + std::to_string(amplitudes_.size()) +
                 " does not match space " + space_.describe());
    }
    if (!all_finite(amplitudes_)) {
        fail(ErrorKind::Numerical, "non-finite amplitude");
    }
    if (normalized_ &&
        std::abs(amplitudes_.squaredNorm() - 1.0) > kConstructionTol) {
        fail(ErrorKind::Numerical,
             "state flagged normalized has squared norm " +
                 std::to_string(amplitudes_.squaredNorm()));
    }
}

StateVector StateVector::basis(const SpaceLabel &space,
                               std::span<const std::size_t> digits) {
    Vector v = Vector::Zero(static_cast<Eigen::Index>(space.dim()));
    v(static_cast<Eigen::Index>(space.index(digits))) = 1.0;
    return StateVector(space, std::move(v));
}

StateVector StateVector::basis(const SpaceLabel &space,
                               std::initializer_list<std::size_t> digits) {
    return basis(space, std::span<const std::size_t>(digits.begin(),
                                                     digits.size()));
}

StateVector StateVector::renormalized() const {
    const double n = amplitudes_.norm();
    if (n == 0.0) {
        fail(ErrorKind::Precondition, "cannot renormalize the zero vector");
    }
    return StateVector(space_, amplitudes_ / n, true);
}

StateVector StateVector::relabeled(SpaceLabel space) const {
    return StateVector(std::move(space), amplitudes_, normalized_);
}

// Operator ------------------------------------------------------------------

Operator::Operator(SpaceLabel space, Matrix matrix, bool unitary_claim)
    : space_(std::move(space)), matrix_(std::move(matrix)),
      unitary_(unitary_claim) {
    const auto d = static_cast<Eigen::Index>(space_.dim());
    if (matrix_.rows() != d || matrix_.cols() != d) {
        fail(ErrorKind::InvalidArgument,
             "operator matrix is " + std::to_string(matrix_.rows()) + "x" +
                 std::to_string(matrix_.cols()) + ", space " +
                 space_.describe() + " needs " + std::to_string(d));
    }
    if (!all_finite(matrix_)) {
        fail(ErrorKind::Numerical, "non-finite operator entry");
    }
    if (unitary_ && unitarity_deviation() > kConstructionTol) {
        fail(ErrorKind::Numerical, "operator claimed unitary deviates by " +
                                       std::to_string(unitarity_deviation()));
    }
}

Operator Operator::identity(const SpaceLabel &space) {
    const auto d = static_cast<Eigen::Index>(space.dim());
    return Operator(space, Matrix::Identity(d, d), true);
}

StateVector Operator::apply(const StateVector &state) const {
    if (!(state.space() == space_)) {
        fail(ErrorKind::InvalidArgument, "operator space " +
                                             space_.describe() +
                                             " != state space " +
                                             state.space().describe());
    }
    Vector out = matrix_ * state.amplitudes();
    const bool keeps_norm = unitary_ && state.normalized();
    return StateVector(space_, std::move(out), keeps_norm);
}

Operator Operator::adjoint() const {
    return Operator(space_, matrix_.adjoint(), unitary_);
}

Operator Operator::scaled(Complex factor) const {
    const bool stays_unitary =
        unitary_ && std::abs(std::abs(factor) - 1.0) <= kConstructionTol;
    return Operator(space_, matrix_ * factor, stays_unitary);
}

Operator Operator::operator*(const Operator &rhs) const {
    if (!(rhs.space_ == space_)) {
        fail(ErrorKind::InvalidArgument, "operator product across spaces");
    }
    return Operator(space_, matrix_ * rhs.matrix_, unitary_ && rhs.unitary_);
}

double Operator::unitarity_deviation() const {
    const auto d = matrix_.rows();
    return max_abs_diff(matrix_.adjoint() * matrix_, Matrix::Identity(d, d));
}

double Operator::hermiticity_deviation() const {
    return max_abs_diff(matrix_, matrix_.adjoint());
}

// Free functions ------------------------------------------------------------

double max_abs_diff(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        fail(ErrorKind::InvalidArgument, "shape mismatch in comparison");
    }
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
        }
    }
    return out;
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    SpaceLabel space = a.space().concat(b.space());
    Vector v = kron(a.amplitudes(), b.amplitudes());
    return StateVector(std::move(space), std::move(v),
                       a.normalized() && b.normalized());
}

Operator tensor(const Operator &a, const Operator &b) {
    SpaceLabel space = a.space().concat(b.space());
    return Operator(std::move(space), kron(a.matrix(), b.matrix()),
                    a.unitary_claim() && b.unitary_claim());
}

void apply_local(const Matrix &local, std::span<const std::size_t> positions,
                 const SpaceLabel &space, Vector &amplitudes) {
    std::size_t local_dim = 1;
    for (auto p : positions) {
        if (p >= space.size()) {
            fail(ErrorKind::InvalidArgument, "target position out of range");
        }
        local_dim *= space[p].dim;
    }
    if (static_cast<std::size_t>(local.rows()) != local_dim ||
        static_cast<std::size_t>(local.cols()) != local_dim) {
        fail(ErrorKind::InvalidArgument,
             "local operator dimension " + std::to_string(local.rows()) +
                 " does not match targets (" + std::to_string(local_dim) +
                 ")");
    }
    if (static_cast<std::size_t>(amplitudes.size()) != space.dim()) {
        fail(ErrorKind::InvalidArgument, "amplitude vector size mismatch");
    }

    // offsets[l]: flat-index displacement of local basis state l.
    std::vector<std::size_t> offsets(local_dim, 0);
    for (std::size_t l = 0; l < local_dim; ++l) {
        std::size_t rem = l;
        std::size_t off = 0;
        for (std::size_t t = positions.size(); t-- > 0;) {
            const std::size_t p = positions[t];
            off += (rem % space[p].dim) * space.stride(p);
            rem /= space[p].dim;
        }
        offsets[l] = off;
    }

    std::vector<std::size_t> strides(positions.size());
    for (std::size_t t = 0; t < positions.size(); ++t) {
        strides[t] = space.stride(positions[t]);
    }

    Vector in(static_cast<Eigen::Index>(local_dim));
    for (std::size_t base = 0; base < space.dim(); ++base) {
        bool is_base = true;
        for (std::size_t t = 0; t < positions.size(); ++t) {
            if ((base / strides[t]) % space[positions[t]].dim != 0) {
                is_base = false;
                break;
            }
        }
        if (!is_base) {
            continue;
        }
        for (std::size_t l = 0; l < local_dim; ++l) {
            in(static_cast<Eigen::Index>(l)) =
                amplitudes(static_cast<Eigen::Index>(base + offsets[l]));
        }
        const Vector out = local * in;
        for (std::size_t l = 0; l < local_dim; ++l) {
            amplitudes(static_cast<Eigen::Index>(base + offsets[l])) =
                out(static_cast<Eigen::Index>(l));
        }
    }
}

StateVector apply_on(const Operator &op,
                     const std::vector<std::string> &targets,
                     const StateVector &state) {
    const auto pos = positions_of(state.space(), targets);
    Vector amps = state.amplitudes();
    apply_local(op.matrix(), pos, state.space(), amps);
    return StateVector(state.space(), std::move(amps),
                       op.unitary_claim() && state.normalized());
}

Operator embed(const Operator &op, const std::vector<std::string> &targets,
               const SpaceLabel &space) {
    const auto pos = positions_of(space, targets);
    const auto d = static_cast<Eigen::Index>(space.dim());
    Matrix full = Matrix::Identity(d, d);
    // Columns of the embedded operator are its images of basis vectors.
    for (Eigen::Index c = 0; c < d; ++c) {
        Vector col = full.col(c);
        apply_local(op.matrix(), pos, space, col);
        full.col(c) = col;
    }
    return Operator(space, std::move(full), op.unitary_claim());
}

Operator expm_hermitian(const Operator &h, double theta, double scale) {
    if (!std::isfinite(theta) || !std::isfinite(scale) || scale == 0.0) {
        fail(ErrorKind::InvalidArgument, "theta and scale must be finite, "
                                         "scale nonzero");
    }
    const double herm = h.hermiticity_deviation();
    if (herm > kConstructionTol) {
        fail(ErrorKind::Precondition,
             "expm_hermitian on non-Hermitian input (deviation " +
                 std::to_string(herm) + ")");
    }
    const Matrix sym = 0.5 * (h.matrix() + h.matrix().adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> eig(sym);
    if (eig.info() != Eigen::Success) {
        fail(ErrorKind::Numerical, "eigendecomposition did not converge");
    }
    const double w = theta / scale;
    Vector phases(eig.eigenvalues().size());
    for (Eigen::Index i = 0; i < phases.size(); ++i) {
        phases(i) = std::polar(1.0, -w * eig.eigenvalues()(i));
    }
    const Matrix &v = eig.eigenvectors();
    Matrix u = v * phases.asDiagonal() * v.adjoint();
    return Operator(h.space(), std::move(u), true);
}

ProbabilityTable born_distribution(const StateVector &state,
                                   const std::vector<std::string> &measured,
                                   bool renormalize) {
    const double n2 = state.amplitudes().squaredNorm();
    if (std::abs(n2 - 1.0) > kConstructionTol) {
        if (!renormalize) {
            fail(ErrorKind::Precondition,
                 "Born distribution of an unnormalized state (squared norm " +
                     std::to_string(n2) + ")");
        }
        if (n2 == 0.0) {
            fail(ErrorKind::Precondition, "Born distribution of zero vector");
        }
    }
    const auto pos = positions_of(state.space(), measured);
    const auto &space = state.space();

    ProbabilityTable table;
    std::size_t outcomes = 1;
    for (auto p : pos) {
        outcomes *= space[p].dim;
    }
    for (std::size_t o = 0; o < outcomes; ++o) {
        Outcome key(pos.size());
        std::size_t rem = o;
        for (std::size_t t = pos.size(); t-- > 0;) {
            key[t] = static_cast<int>(rem % space[pos[t]].dim);
            rem /= space[pos[t]].dim;
        }
        table.emplace(std::move(key), 0.0);
    }

    Outcome key(pos.size());
    for (std::size_t i = 0; i < space.dim(); ++i) {
        const double p = std::norm(state[i]);
        if (p == 0.0) {
            continue;
        }
        for (std::size_t t = 0; t < pos.size(); ++t) {
            key[t] = static_cast<int>((i / space.stride(pos[t])) %
                                      space[pos[t]].dim);
        }
        table[key] += p;
    }
    for (auto &[k, p] : table) {
        p /= n2;
    }
    return table;
}

Matrix reduced_density(const StateVector &state,
                       const std::vector<std::string> &kept) {
    const auto pos = positions_of(state.space(), kept);
    const auto &space = state.space();
    std::size_t kept_dim = 1;
    for (auto p : pos) {
        kept_dim *= space[p].dim;
    }
    const std::size_t rest_dim = space.dim() / kept_dim;

    std::vector<bool> is_kept(space.size(), false);
    for (auto p : pos) {
        is_kept[p] = true;
    }

    // Reshape into a kept x rest matrix, then rho = M M^dagger.
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(kept_dim),
                            static_cast<Eigen::Index>(rest_dim));
    for (std::size_t i = 0; i < space.dim(); ++i) {
        const auto d = space.digits(i);
        std::size_t k = 0;
        for (auto p : pos) {
            k = k * space[p].dim + d[p];
        }
        std::size_t r = 0;
        for (std::size_t s = 0; s < space.size(); ++s) {
            if (!is_kept[s]) {
                r = r * space[s].dim + d[s];
            }
        }
        m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(r)) =
            state[i];
    }
    return m * m.adjoint();
}

PhaseComparison equal_up_to_global_phase(const StateVector &a,
                                         const StateVector &b, double tol) {
    if (a.dim() != b.dim()) {
        fail(ErrorKind::InvalidArgument, "phase comparison dimension mismatch");
    }
    const Complex ip = a.amplitudes().dot(b.amplitudes()); // <a|b>
    PhaseComparison out;
    out.overlap = std::abs(ip);
    out.equal = out.overlap >= 1.0 - tol;
    if (out.equal) {
        out.phase = std::arg(ip);
    }
    return out;
}

} // namespace djsim
