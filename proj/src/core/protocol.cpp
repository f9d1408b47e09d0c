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

#include "djsim/protocol.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "djsim/error.hpp"
#include "djsim/optics.hpp"

namespace djsim::protocol {

namespace {

template <class... Ts> struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kPi = std::numbers::pi;

const std::array<std::array<int, 4>, 8> kCatalog = {{
    {0, 0, 0, 0},
    {1, 1, 1, 1},
    {0, 0, 1, 1},
    {1, 1, 0, 0},
    {0, 1, 0, 1},
    {1, 0, 1, 0},
    {0, 1, 1, 0},
    {1, 0, 0, 1},
}};

int catalog_index(const std::vector<int> &table) {
    if (table.size() != 4) {
        return 0;
    }
    for (std::size_t i = 0; i < kCatalog.size(); ++i) {
        if (std::equal(table.begin(), table.end(), kCatalog[i].begin())) {
            return static_cast<int>(i) + 1;
        }
    }
    return 0;
}

ensemble::AtomRotation atom_h1() {
    return {ensemble::microwave_rotation(ensemble::MicrowavePulse::hadamard(1))
                .matrix(),
            "h1 (microwave)"};
}

ensemble::PhotonGate photon_h1(int photon) {
    return {photon, optics::hadamard_variant(1).matrix(),
            "h1"};
}

ensemble::PhotonGate photon_composite(int photon, optics::CompositeKind kind) {
    return {photon, optics::composite_h(kind).matrix(),
            kind == optics::CompositeKind::Prime ? "h'" : "h''"};
}

} // namespace

std::string to_string(Classification c) {
    switch (c) {
    case Classification::Constant:
        return "constant";
    case Classification::Balanced:
        return "balanced";
    case Classification::Neither:
        return "neither";
    }
    return "neither";
}

BooleanFunction::BooleanFunction(std::vector<int> table)
    : table_(std::move(table)) {
    const std::size_t len = table_.size();
    if (len < 2 || !std::has_single_bit(len)) {
        fail(ErrorKind::InvalidArgument,
             "truth table length must be a power of two >= 2, got " +
                 std::to_string(len));
    }
    std::size_t ones = 0;
    for (int v : table_) {
        if (v != 0 && v != 1) {
            fail(ErrorKind::InvalidArgument, "truth table entries must be 0 or 1");
        }
        ones += static_cast<std::size_t>(v);
    }
    n_bits_ = std::countr_zero(len);
    if (ones == 0 || ones == len) {
        class_ = Classification::Constant;
    } else if (2 * ones == len) {
        class_ = Classification::Balanced;
    }
    if (const int i = catalog_index(table_); i != 0) {
        id_ = "f" + std::to_string(i);
    }
}

BooleanFunction BooleanFunction::catalog(int index) {
    if (index < 1 || index > 8) {
        fail(ErrorKind::InvalidArgument,
             "catalog index must be 1..8, got " + std::to_string(index));
    }
    const auto &row = kCatalog[static_cast<std::size_t>(index - 1)];
    return BooleanFunction(std::vector<int>(row.begin(), row.end()));
}

BooleanFunction BooleanFunction::from_id(std::string_view id) {
    if (id.size() == 2 && id[0] == 'f' && id[1] >= '1' && id[1] <= '8') {
        return catalog(id[1] - '0');
    }
    fail(ErrorKind::InvalidArgument,
         "unknown function id '" + std::string(id) + "' (expected f1..f8)");
}

std::string BooleanFunction::label() const {
    if (id_) {
        return *id_;
    }
    std::string s;
    for (int v : table_) {
        s.push_back(static_cast<char>('0' + v));
    }
    return s;
}

const std::vector<BooleanFunction> &catalog_functions() {
    static const std::vector<BooleanFunction> all = [] {
        std::vector<BooleanFunction> v;
        for (int i = 1; i <= 8; ++i) {
            v.push_back(BooleanFunction::catalog(i));
        }
        return v;
    }();
    return all;
}

std::vector<BooleanFunction> enumerate_functions(int n_bits) {
    if (n_bits < 1 || n_bits > 4) {
        fail(ErrorKind::InvalidArgument,
             "enumeration supports 1 <= n_bits <= 4, got " +
                 std::to_string(n_bits));
    }
    const std::size_t len = std::size_t{1} << n_bits;
    std::vector<BooleanFunction> out;
    out.emplace_back(std::vector<int>(len, 0));
    out.emplace_back(std::vector<int>(len, 1));
    // Increasing masks with table[0] as the top bit enumerate tables in
    // lexicographic order.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != len / 2) {
            continue;
        }
        std::vector<int> t(len);
        for (std::size_t i = 0; i < len; ++i) {
            t[i] = static_cast<int>((mask >> (len - 1 - i)) & 1U);
        }
        out.emplace_back(std::move(t));
    }
    return out;
}

std::string to_string(Mode m) { return m == Mode::Exact ? "exact" : "paper"; }

Mode parse_mode(std::string_view s) {
    if (s == "exact") {
        return Mode::Exact;
    }
    if (s == "paper") {
        return Mode::Paper;
    }
    fail(ErrorKind::InvalidArgument,
         "unknown mode '" + std::string(s) + "' (expected exact or paper)");
}

ProtocolOutcome classify(const Outcome &pattern) {
    if (pattern.size() != 2 || (pattern[0] != 0 && pattern[0] != 1) ||
        (pattern[1] != 0 && pattern[1] != 1)) {
        fail(ErrorKind::InvalidArgument, "a photon pattern is two bits");
    }
    ProtocolOutcome o;
    o.pattern = pattern;
    const int code = 2 * pattern[0] + pattern[1];
    switch (code) {
    case 3:
        o.classification = Classification::Constant;
        o.function_pair = {"f1", "f2"};
        break;
    case 1:
        o.function_pair = {"f3", "f4"};
        break;
    case 2:
        o.function_pair = {"f5", "f6"};
        break;
    default:
        o.function_pair = {"f7", "f8"};
        break;
    }
    return o;
}

PhotonCorrection h_eq_for(const BooleanFunction &f) {
    using K = optics::CompositeKind;
    const std::string id = f.id().value_or("");
    if (id == "f3" || id == "f4") {
        return {K::DoublePrime, K::Prime};
    }
    if (id == "f5" || id == "f6") {
        return {K::Prime, K::DoublePrime};
    }
    if (id == "f7" || id == "f8") {
        return {K::DoublePrime, K::DoublePrime};
    }
    fail(ErrorKind::InvalidArgument,
         "no photon correction for " + f.label() +
             " (defined for the balanced catalog functions f3..f8)");
}

Oracle build_oracle(const BooleanFunction &f, Mode mode, double theta) {
    Oracle o;
    switch (f.classification()) {
    case Classification::Neither:
        fail(ErrorKind::Unsupported,
             f.label() + " is neither constant nor balanced");
    case Classification::Constant:
        if (f(0) == 1) {
            o.steps.emplace_back(ensemble::AtomRotation{
                ensemble::microwave_rotation(ensemble::MicrowavePulse::flip())
                    .matrix(),
                "NOT (microwave)"});
        }
        return o;
    case Classification::Balanced:
        break;
    }
    if (f.n_bits() != 2) {
        fail(ErrorKind::Unsupported,
             "the ensemble oracle is two-bit; use the reference circuit for " +
                 f.label());
    }
    const PhotonCorrection c = h_eq_for(f);
    o.uses_ensemble = true;
    o.steps.emplace_back(atom_h1());
    if (mode == Mode::Exact) {
        o.steps.emplace_back(ensemble::EnsembleEvolution{theta});
    } else {
        o.steps.emplace_back(ensemble::PaperEvolution{theta});
    }
    o.steps.emplace_back(photon_composite(1, c.photon1));
    o.steps.emplace_back(photon_composite(2, c.photon2));
    return o;
}

std::vector<SimStep> protocol_steps(const BooleanFunction &f, Mode mode,
                                    double theta) {
    std::vector<SimStep> steps{photon_h1(1), photon_h1(2), atom_h1()};
    for (auto &s : build_oracle(f, mode, theta).steps) {
        steps.push_back(std::move(s));
    }
    steps.emplace_back(photon_h1(1));
    steps.emplace_back(photon_h1(2));
    return steps;
}

bool ProtocolTrace::has_stage(std::string_view name) const {
    return std::any_of(stages_.begin(), stages_.end(),
                       [&](const ProtocolStage &s) { return s.name == name; });
}

const sim::SymmetricEnsembleState &
ProtocolTrace::stage(std::string_view name) const {
    for (const auto &s : stages_) {
        if (s.name == name) {
            return s.state;
        }
    }
    fail(ErrorKind::InvalidArgument,
         "no stage '" + std::string(name) + "' in this trace");
}

StateVector ProtocolTrace::state(std::string_view name) const {
    return stage(name).materialize();
}

ProbabilityTable ProtocolTrace::final_distribution() const {
    return stage("psi3").photon_distribution();
}

ProtocolOutcome ProtocolTrace::outcome() const {
    const ProbabilityTable dist = final_distribution();
    const auto top = std::max_element(
        dist.begin(), dist.end(),
        [](const auto &a, const auto &b) { return a.second < b.second; });
    return classify(top->first);
}

double ProtocolTrace::top_probability() const {
    double best = 0.0;
    for (const auto &[pattern, p] : final_distribution()) {
        best = std::max(best, p);
    }
    return best;
}

ProtocolTrace run_protocol(const BooleanFunction &f, Mode mode,
                           const ensemble::EnsembleConfig &config) {
    const bool balanced = f.classification() == Classification::Balanced;
    if (balanced && std::abs(config.theta() - kPi / 2) > kConstructionTol * kPi) {
        fail(ErrorKind::Precondition,
             "balanced oracles need theta = lambda N t = pi/2, got " +
                 std::to_string(config.theta()));
    }
    const Oracle oracle = build_oracle(f, mode, config.theta());

    ProtocolTrace trace(f, mode, config.n_atoms());
    trace.warnings_ = config.warnings();
    auto s = sim::SymmetricEnsembleState::from(
        ensemble::AtomState::excited(config.n_atoms()),
        optics::source_and_initialize());
    trace.stages_.push_back({"psi0", s});

    s.apply_photon(1, optics::hadamard_variant(1).matrix());
    s.apply_photon(2, optics::hadamard_variant(1).matrix());
    s.apply_atoms(atom_h1().matrix);
    trace.stages_.push_back({"psi1", s});

    for (const auto &step : oracle.steps) {
        trace.oracle_steps_.push_back(ensemble::describe(step));
        std::visit(
            Overloaded{
                [&](const ensemble::PhotonGate &g) {
                    s.apply_photon(g.photon, g.matrix);
                },
                [&](const ensemble::AtomRotation &r) {
                    s.apply_atoms(r.matrix);
                    if (balanced) {
                        trace.stages_.push_back({"psi1_prime", s});
                    }
                },
                [&](const ensemble::EnsembleEvolution &e) {
                    s.evolve(e.theta);
                    ++trace.evolutions_;
                    trace.stages_.push_back({"psi1_double_prime", s});
                },
                [&](const ensemble::PaperEvolution &e) {
                    ensemble::PaperMapResult r = s.apply_paper(e.theta);
                    ++trace.evolutions_;
                    trace.post_ *= r.post_selection_probability;
                    for (auto &w : r.warnings) {
                        trace.warnings_.push_back(std::move(w));
                    }
                    trace.stages_.push_back({"psi1_double_prime", s});
                },
            },
            step);
    }
    trace.stages_.push_back({"psi2", s});

    s.apply_photon(1, optics::hadamard_variant(1).matrix());
    s.apply_photon(2, optics::hadamard_variant(1).matrix());
    trace.stages_.push_back({"psi3", s});
    return trace;
}

} // namespace djsim::protocol
