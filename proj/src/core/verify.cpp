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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "djsim/layout.hpp"
#include "djsim/report.hpp"
#include "djsim/simulators.hpp"

namespace djsim::report {

namespace {

using optics::CompositeKind;
using optics::Matrix2;
using optics::Vector2;
using ensemble::SimStep;
constexpr double kPi = std::numbers::pi;
constexpr double kExactTol = 1e-12;

class Checks {
  public:
    void within(std::string name, std::string group, double deviation,
                double tolerance, std::string detail = {}, bool required = true) {
        out_.push_back({std::move(name), std::move(group), required, "pass",
                        deviation <= tolerance, deviation, tolerance,
                        std::move(detail)});
    }

    void add(CheckResult c) { out_.push_back(std::move(c)); }

    std::vector<CheckResult> take() { return std::move(out_); }

  private:
    std::vector<CheckResult> out_;
};

std::string num(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

Matrix2 diag_phase(double a, double b) {
    Matrix2 m = Matrix2::Zero();
    m(0, 0) = std::polar(1.0, a);
    m(1, 1) = std::polar(1.0, b);
    return m;
}

void optics_checks(Checks &c) {
    for (int i = 1; i <= 4; ++i) {
        const auto plates = optics::hadamard_gadget(i);
        c.within("optics.gadget.h" + std::to_string(i), "optics",
                 max_abs_diff(optics::gadget_compose(plates).matrix(),
                              optics::hadamard_variant(i).matrix()),
                 kExactTol, "wave-plate product vs Hadamard variant, raw entries");
    }
    c.within("optics.quarter-wave.pi/4.is-h2", "optics",
             max_abs_diff(optics::quarter_wave(kPi / 4).matrix(),
                          optics::hadamard_variant(2).matrix()),
             kExactTol);
    c.within("optics.quarter-wave.-pi/4.is-h4", "optics",
             max_abs_diff(optics::quarter_wave(-kPi / 4).matrix(),
                          optics::hadamard_variant(4).matrix()),
             kExactTol);
    {
        const Vector2 out = optics::half_wave(kPi / 4).apply(Vector2(0.0, 1.0));
        const Vector2 want(Complex(0.0, 1.0), 0.0);
        c.within("optics.half-wave.pi/4.swaps", "optics", (out - want).cwiseAbs().maxCoeff(),
                 kExactTol, "H(pi/4)|1> = i|0>");
    }
    c.within("optics.composite.h-prime", "optics",
             max_abs_diff(optics::composite_h(CompositeKind::Prime).matrix(),
                          diag_phase(kPi / 4, -kPi / 4)),
             kExactTol, "h1 h4 h3 = diag(e^{i pi/4}, e^{-i pi/4})");
    c.within("optics.composite.h-double-prime", "optics",
             max_abs_diff(optics::composite_h(CompositeKind::DoublePrime).matrix(),
                          diag_phase(-kPi / 4, kPi / 4)),
             kExactTol, "h1 h2 h3 = diag(e^{-i pi/4}, e^{i pi/4})");
    c.within("optics.composite.product-is-identity", "optics",
             max_abs_diff((optics::composite_h(CompositeKind::Prime) *
                           optics::composite_h(CompositeKind::DoublePrime))
                              .matrix(),
                          Matrix2::Identity()),
             kExactTol);
    {
        const StateVector src = optics::source_and_initialize();
        const auto cmp = equal_up_to_global_phase(
            src, StateVector::basis(layout::photons(), {0, 0}));
        c.within("optics.source.initializes-00", "optics", 1.0 - cmp.overlap, kExactTol,
                 "global phase " + num(cmp.phase));
    }
}

void microwave_checks(Checks &c) {
    for (int i = 1; i <= 4; ++i) {
        c.within("microwave.h" + std::to_string(i), "microwave",
                 max_abs_diff(ensemble::microwave_rotation(
                                  ensemble::MicrowavePulse::hadamard(i))
                                  .matrix(),
                              optics::hadamard_variant(i).matrix()),
                 kExactTol, "area pi/4, raw entries");
    }
    Matrix2 flip;
    flip << 0.0, 1.0, -1.0, 0.0;
    c.within("microwave.not", "microwave",
             max_abs_diff(
                 ensemble::microwave_rotation(ensemble::MicrowavePulse::flip()).matrix(),
                 flip),
             kExactTol, "area pi/2, phase pi/2");
}

void hamiltonian_checks(Checks &c) {
    const auto cfg = ensemble::EnsembleConfig::with_theta(1, kPi / 2);
    const Operator circ = ensemble::build_h_eff(cfg, optics::PhotonBasis::Circular);
    const Operator lin = ensemble::build_h_eff(cfg, optics::PhotonBasis::Linear);
    c.within("hamiltonian.hermitian", "hamiltonian", circ.hermiticity_deviation(),
             kExactTol);
    c.within("hamiltonian.linear-vs-projector-assembly", "hamiltonian",
             max_abs_diff(lin.matrix(),
                          ensemble::build_h_eff_linear_projectors(cfg).matrix()),
             kExactTol, "basis-rotated form vs projectors on (|0> +- i|1>)/sqrt2");
    const Operator printed = ensemble::build_h_eff_printed_linear(cfg);
    // Compared in units of lambda N so the deviation does not depend on the
    // configuration's scale.
    const double unit = cfg.lambda() * static_cast<double>(cfg.n_atoms());
    c.within("hamiltonian.linear-vs-printed-form", "hamiltonian",
             max_abs_diff(lin.matrix(), printed.matrix()) / unit, kExactTol,
             "term-by-term linear-basis form; its hermiticity deviation is " +
                 num(printed.hermiticity_deviation()) +
                 ", so no basis change of the Hermitian operator can match it");

    const Operator u = ensemble::u_eff_exact(cfg, optics::PhotonBasis::Circular);
    c.within("evolution.unitary", "evolution", u.unitarity_deviation(), kExactTol);
    // |0>_A |1,0>_1 |0,1>_2 in circular coordinates: index (0, 0, 1).
    const StateVector probe =
        StateVector::basis(layout::collective(), {0, 0, 1});
    const StateVector out = u.apply(probe);
    c.within("evolution.eigenphase", "evolution",
             std::abs(out[1] - Complex(0.0, -1.0)), kExactTol,
             "one eps+ photon with atoms in |0>_A picks up -i at theta = pi/2");
}

void audit_checks(Checks &c) {
    const auto cfg = ensemble::EnsembleConfig::with_theta(1, kPi / 2);
    const ensemble::PhasesClaimReport r = ensemble::check_phases_claim(cfg);
    CheckResult audit;
    audit.name = "audit.polarizer-map.unitarity-audit";
    audit.group = "audit";
    audit.expectation = "expected-inconsistent";
    audit.deviation = std::max(r.input_gram_deviation, r.claimed_overlap_deviation);
    audit.tolerance = kExactTol;
    audit.passed = !r.claim_unitary && audit.deviation <= kExactTol;
    std::ostringstream d;
    d << r.verdict << "; row fidelities vs exact evolution:";
    for (std::size_t i = 0; i < r.row_labels.size(); ++i) {
        d << " " << r.row_labels[i] << "=" << num(r.row_fidelity[i]);
    }
    audit.detail = d.str();
    c.add(audit);

    // Each photon leaves the map in the eps+ circular mode.
    const ensemble::PaperPolarizerMap map(kPi / 2);
    const StateVector out = map.row(0, 0, 0);
    const StateVector circ = optics::basis_convert(out, optics::PhotonBasis::Circular);
    const auto cmp = equal_up_to_global_phase(
        circ, StateVector::basis(layout::collective(), {0, 0, 0}));
    c.within("audit.polarizer-map.outputs-eps-plus", "audit", 1.0 - cmp.overlap, kExactTol);
}

void protocol_checks(Checks &c) {
    const auto cfg = ensemble::EnsembleConfig::with_theta(1, kPi / 2);
    const std::vector<Outcome> expected = {{1, 1}, {1, 1}, {0, 1}, {0, 1},
                                           {1, 0}, {1, 0}, {0, 0}, {0, 0}};
    for (int i = 1; i <= 8; ++i) {
        const auto f = protocol::BooleanFunction::catalog(i);
        const auto t = protocol::run_protocol(f, protocol::Mode::Paper, cfg);
        const double p = t.final_distribution().at(expected[i - 1]);
        const bool agrees = t.outcome().classification == f.classification();
        c.add({"protocol.paper." + f.label(), "protocol", true, "pass",
               agrees && p >= 1.0 - protocol::kDeterministicTol, 1.0 - p,
               protocol::kDeterministicTol,
               "expected pattern " + std::to_string(expected[i - 1][0]) +
                   std::to_string(expected[i - 1][1]) + ", ensemble evolutions " +
                   std::to_string(t.ensemble_evolutions())});
    }
    for (int i : {1, 2}) {
        const auto f = protocol::BooleanFunction::catalog(i);
        const auto t = protocol::run_protocol(f, protocol::Mode::Exact, cfg);
        const double p = t.final_distribution().at({1, 1});
        c.add({"protocol.exact." + f.label(), "protocol", true, "pass",
               p >= 1.0 - protocol::kDeterministicTol && t.ensemble_evolutions() == 0,
               1.0 - p, protocol::kDeterministicTol, "no ensemble evolution"});
    }
    int wrong_counts = 0;
    for (const auto &f : protocol::catalog_functions()) {
        for (auto mode : {protocol::Mode::Exact, protocol::Mode::Paper}) {
            const auto t = protocol::run_protocol(f, mode, cfg);
            const int want =
                f.classification() == protocol::Classification::Balanced ? 1 : 0;
            wrong_counts += t.ensemble_evolutions() != want ? 1 : 0;
        }
    }
    c.within("protocol.single-oracle-call", "protocol", wrong_counts, 0.0,
             "runs with an unexpected number of ensemble evolutions");
    // Informational: does discrimination survive exact evolution?
    for (int i = 3; i <= 8; ++i) {
        const auto f = protocol::BooleanFunction::catalog(i);
        const auto t = protocol::run_protocol(f, protocol::Mode::Exact, cfg);
        const double p = t.final_distribution().at(expected[i - 1]);
        std::ostringstream d;
        d << "exact-evolution pattern distribution:";
        for (const auto &[pattern, q] : t.final_distribution()) {
            d << " " << pattern[0] << pattern[1] << "=" << num(q);
        }
        c.add({"protocol.exact." + f.label(), "protocol", false, "pass",
               p >= 1.0 - protocol::kDeterministicTol, 1.0 - p,
               protocol::kDeterministicTol, d.str()});
    }
}

void oracle_checks(Checks &c, std::uint64_t max_n) {
    // Collective model vs brute force with atoms in the Dicke extremes.
    const StateVector photons = [] {
        const auto h1 = optics::hadamard_variant(1).as_operator(layout::kPhoton1);
        const auto h2 = optics::hadamard_variant(2).as_operator(layout::kPhoton2);
        return tensor(h1.apply(StateVector::basis(layout::photon(layout::kPhoton1), {0})),
                      h2.apply(StateVector::basis(layout::photon(layout::kPhoton2), {1})));
    }();
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        double dev = 0.0;
        for (int a = 0; a < 2; ++a) {
            const auto atoms = a == 0 ? ensemble::AtomState::ground(n)
                                      : ensemble::AtomState::excited(n);
            const std::vector<SimStep> steps = {ensemble::EnsembleEvolution{kPi / 2}};
            const StateVector naive = sim::full_simulate_naive(n, atoms, photons, steps);
            Vector init = Vector::Zero(8);
            init.segment<4>(4 * a) = photons.amplitudes();
            const StateVector coll = sim::simulate_collective(
                n, StateVector(layout::collective(), init), steps);
            dev = std::max(dev,
                           max_abs_diff(reduced_density(naive, {layout::kPhoton1,
                                                                layout::kPhoton2}),
                                        reduced_density(coll, {layout::kPhoton1,
                                                               layout::kPhoton2})));
        }
        c.within("oracle.collective-vs-naive.N" + std::to_string(n), "oracle", dev,
                 kOracleTol, "photon reduced density, atoms in |0>_A and |1>_A");
    }
    for (const auto &f : protocol::catalog_functions()) {
        double dev = 0.0;
        for (std::uint64_t n = 1; n <= max_n; ++n) {
            dev = std::max(dev, oracle_check(f, protocol::Mode::Exact, n).max_deviation);
        }
        c.within("oracle.dicke-vs-naive." + f.label(), "oracle", dev, kOracleTol,
                 "full protocol, N = 1.." + std::to_string(max_n));
    }
}

void reference_checks(Checks &c) {
    for (int n = 1; n <= 3; ++n) {
        int wrong = 0;
        double worst = 1.0;
        const auto fns = protocol::enumerate_functions(n);
        for (const auto &f : fns) {
            const auto r = protocol::reference_dj_circuit(f);
            worst = std::min(worst, r.verdict_probability);
            wrong += r.classification != f.classification() ? 1 : 0;
        }
        c.add({"reference.n" + std::to_string(n), "reference", true, "pass",
               wrong == 0 && worst >= 1.0 - protocol::kDeterministicTol, 1.0 - worst,
               protocol::kDeterministicTol,
               std::to_string(fns.size()) + " functions, " + std::to_string(wrong) +
                   " misclassified"});
    }
}

void params_checks(Checks &c) {
    const auto cs = params::required_detuning(params::preset("cs-cell"));
    c.within("params.cs-cell.ratio", "params", std::abs(cs.ratio - 12.35), 0.05,
             "Delta/g = " + num(cs.ratio));
    c.within("params.cs-cell.transit-time", "params",
             std::abs(cs.transit_time_s / 6.67e-13 - 1.0), 0.005,
             "T = " + num(cs.transit_time_s) + " s");
    const auto rb = params::required_detuning(params::preset("rb-mot"));
    c.within("params.rb-mot.ratio", "params",
             std::max({0.0, 9.0 - rb.ratio, rb.ratio - 9.5}), 0.0,
             "Delta/g = " + num(rb.ratio) + ", band [9.0, 9.5]");
    c.within("params.rb-mot.transit-time", "params",
             std::abs(rb.transit_time_s / 1.67e-12 - 1.0), 0.005,
             "T = " + num(rb.transit_time_s) + " s");
    c.within("params.theta-round-trip", "params",
             std::abs(params::config_from(cs).theta() - kPi / 2), kExactTol);
}

void sampling_checks(Checks &c) {
    const ProbabilityTable dist = {{{0}, 0.5}, {{1}, 0.5}};
    const CountTable a = sample_shots(dist, 10000, 20260101);
    const CountTable b = sample_shots(dist, 10000, 20260101);
    const double off = std::abs(static_cast<double>(a.at({0})) - 5000.0);
    c.within("sampling.three-sigma", "sampling", off, 150.0,
             "count of 0 = " + std::to_string(a.at({0})) + " of 10000");
    c.within("sampling.reproducible", "sampling", a == b ? 0.0 : 1.0, 0.0);
}

} // namespace

std::vector<CheckResult> verification_checks(std::uint64_t n_atoms_oracle) {
    Checks c;
    optics_checks(c);
    microwave_checks(c);
    hamiltonian_checks(c);
    audit_checks(c);
    protocol_checks(c);
    oracle_checks(c, n_atoms_oracle);
    reference_checks(c);
    params_checks(c);
    sampling_checks(c);
    return c.take();
}

} // namespace djsim::report
