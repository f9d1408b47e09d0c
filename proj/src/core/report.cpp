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

#include "djsim/report.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <iomanip>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "djsim/error.hpp"
#include "djsim/simulators.hpp"

namespace djsim::report {

using ojson = nlohmann::ordered_json;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kMaxTraceAtoms = 4096;

// JSON helpers ---------------------------------------------------------------

template <class T> ojson opt(const std::optional<T> &v) {
    return v ? ojson(*v) : ojson(nullptr);
}

template <class T>
std::optional<T> get_opt(const ojson &j, const char *key) {
    const ojson &v = j.at(key);
    if (v.is_null()) {
        return std::nullopt;
    }
    return v.get<T>();
}

ojson request_json(const RunRequest &r) {
    ojson j;
    j["command"] = to_string(r.command);
    j["function"] = opt(r.function_id);
    j["mode"] = protocol::to_string(r.mode);
    j["shots"] = r.shots;
    j["seed"] = r.seed;
    j["n_atoms_oracle"] = opt(r.n_atoms_oracle);
    j["medium"] = opt(r.medium);
    j["out"] = opt(r.output_path);
    return j;
}

RunRequest request_from(const ojson &j) {
    RunRequest r;
    r.command = parse_command(j.at("command").get<std::string>());
    r.function_id = get_opt<std::string>(j, "function");
    r.mode = protocol::parse_mode(j.at("mode").get<std::string>());
    r.shots = j.at("shots").get<std::uint64_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.n_atoms_oracle = get_opt<std::uint64_t>(j, "n_atoms_oracle");
    r.medium = get_opt<std::string>(j, "medium");
    r.output_path = get_opt<std::string>(j, "out");
    return r;
}

ojson feasibility_json(const params::FeasibilityReport &f) {
    ojson m;
    m["name"] = f.medium.name;
    m["length_m"] = f.medium.length_m;
    m["n_atoms"] = f.medium.n_atoms;
    m["coupling_rad_s"] = f.medium.coupling_rad_s;
    m["relaxation_s"] = f.medium.relaxation_s;
    ojson j;
    j["medium"] = m;
    j["transit_time_s"] = f.transit_time_s;
    j["lambda_rad_s"] = f.lambda_rad_s;
    j["detuning_rad_s"] = f.detuning_rad_s;
    j["detuning_cyclic_hz"] = f.detuning_cyclic_hz;
    j["ratio"] = f.ratio;
    j["decoherence_margin"] = f.decoherence_margin;
    j["dispersive_threshold"] = f.dispersive_threshold;
    j["dispersive_ok"] = f.dispersive_ok;
    j["decoherence_ok"] = f.decoherence_ok;
    j["notes"] = f.notes;
    return j;
}

params::FeasibilityReport feasibility_from(const ojson &j) {
    params::FeasibilityReport f;
    const ojson &m = j.at("medium");
    f.medium.name = m.at("name").get<std::string>();
    f.medium.length_m = m.at("length_m").get<double>();
    f.medium.n_atoms = m.at("n_atoms").get<std::uint64_t>();
    f.medium.coupling_rad_s = m.at("coupling_rad_s").get<double>();
    f.medium.relaxation_s = m.at("relaxation_s").get<double>();
    f.transit_time_s = j.at("transit_time_s").get<double>();
    f.lambda_rad_s = j.at("lambda_rad_s").get<double>();
    f.detuning_rad_s = j.at("detuning_rad_s").get<double>();
    f.detuning_cyclic_hz = j.at("detuning_cyclic_hz").get<double>();
    f.ratio = j.at("ratio").get<double>();
    f.decoherence_margin = j.at("decoherence_margin").get<double>();
    f.dispersive_threshold = j.at("dispersive_threshold").get<double>();
    f.dispersive_ok = j.at("dispersive_ok").get<bool>();
    f.decoherence_ok = j.at("decoherence_ok").get<bool>();
    f.notes = j.at("notes").get<std::vector<std::string>>();
    return f;
}

ojson function_json(const FunctionReport &f) {
    ojson j;
    j["id"] = f.id;
    j["table"] = f.table;
    j["expected_classification"] = f.expected_classification;
    j["mode"] = f.mode;
    j["n_atoms"] = f.n_atoms;
    j["theta"] = f.theta;
    j["ensemble_evolutions"] = f.ensemble_evolutions;
    j["post_selection_probability"] = f.post_selection_probability;
    ojson dist = ojson::array();
    for (const auto &p : f.distribution) {
        ojson e;
        e["pattern"] = p.pattern;
        e["clicks"] = p.clicks;
        e["probability"] = p.probability;
        dist.push_back(e);
    }
    j["distribution"] = dist;
    ojson out;
    out["pattern"] = f.pattern;
    out["classification"] = f.classification;
    out["function_pair"] = f.function_pair;
    out["top_probability"] = f.top_probability;
    out["deterministic"] = f.deterministic;
    out["agrees_with_table"] = f.agrees_with_table;
    j["outcome"] = out;
    j["oracle_steps"] = f.oracle_steps;
    j["warnings"] = f.warnings;
    if (f.oracle_check) {
        const OracleCheck &c = *f.oracle_check;
        ojson o;
        o["n_atoms"] = c.n_atoms;
        o["reference"] = c.reference;
        o["max_deviation"] = c.max_deviation;
        o["tolerance"] = c.tolerance;
        o["passed"] = c.passed;
        o["note"] = c.note;
        j["oracle_check"] = o;
    } else {
        j["oracle_check"] = nullptr;
    }
    if (f.samples) {
        const SampleSummary &s = *f.samples;
        ojson o;
        o["shots"] = s.shots;
        o["seed"] = s.seed;
        ojson counts = ojson::array();
        for (const auto &c : s.counts) {
            ojson e;
            e["pattern"] = c.pattern;
            e["clicks"] = c.clicks;
            e["count"] = c.count;
            counts.push_back(e);
        }
        o["counts"] = counts;
        o["classification_rate"] = s.classification_rate;
        j["samples"] = o;
    } else {
        j["samples"] = nullptr;
    }
    ojson trace = ojson::array();
    for (const auto &t : f.trace) {
        ojson e;
        e["name"] = t.name;
        e["space"] = t.space;
        e["amplitudes"] = t.amplitudes;
        trace.push_back(e);
    }
    j["trace"] = trace;
    return j;
}

FunctionReport function_from(const ojson &j) {
    FunctionReport f;
    f.id = j.at("id").get<std::string>();
    f.table = j.at("table").get<std::vector<int>>();
    f.expected_classification = j.at("expected_classification").get<std::string>();
    f.mode = j.at("mode").get<std::string>();
    f.n_atoms = j.at("n_atoms").get<std::uint64_t>();
    f.theta = j.at("theta").get<double>();
    f.ensemble_evolutions = j.at("ensemble_evolutions").get<int>();
    f.post_selection_probability = j.at("post_selection_probability").get<double>();
    for (const auto &e : j.at("distribution")) {
        f.distribution.push_back({e.at("pattern").get<Outcome>(),
                                  e.at("clicks").get<std::array<std::string, 2>>(),
                                  e.at("probability").get<double>()});
    }
    const ojson &out = j.at("outcome");
    f.pattern = out.at("pattern").get<Outcome>();
    f.classification = out.at("classification").get<std::string>();
    f.function_pair = out.at("function_pair").get<std::array<std::string, 2>>();
    f.top_probability = out.at("top_probability").get<double>();
    f.deterministic = out.at("deterministic").get<bool>();
    f.agrees_with_table = out.at("agrees_with_table").get<bool>();
    f.oracle_steps = j.at("oracle_steps").get<std::vector<std::string>>();
    f.warnings = j.at("warnings").get<std::vector<std::string>>();
    if (const ojson &o = j.at("oracle_check"); !o.is_null()) {
        f.oracle_check = OracleCheck{o.at("n_atoms").get<std::uint64_t>(),
                                     o.at("reference").get<std::string>(),
                                     o.at("max_deviation").get<double>(),
                                     o.at("tolerance").get<double>(),
                                     o.at("passed").get<bool>(),
                                     o.at("note").get<std::string>()};
    }
    if (const ojson &o = j.at("samples"); !o.is_null()) {
        SampleSummary s;
        s.shots = o.at("shots").get<std::uint64_t>();
        s.seed = o.at("seed").get<std::uint64_t>();
        for (const auto &e : o.at("counts")) {
            s.counts.push_back({e.at("pattern").get<Outcome>(),
                                e.at("clicks").get<std::array<std::string, 2>>(),
                                e.at("count").get<std::uint64_t>()});
        }
        s.classification_rate = o.at("classification_rate").get<double>();
        f.samples = std::move(s);
    }
    for (const auto &e : j.at("trace")) {
        f.trace.push_back(
            {e.at("name").get<std::string>(), e.at("space").get<std::string>(),
             e.at("amplitudes").get<std::vector<std::array<double, 2>>>()});
    }
    return f;
}

ojson check_json(const CheckResult &c) {
    ojson j;
    j["name"] = c.name;
    j["group"] = c.group;
    j["required"] = c.required;
    j["expectation"] = c.expectation;
    j["passed"] = c.passed;
    j["deviation"] = c.deviation;
    j["tolerance"] = c.tolerance;
    j["detail"] = c.detail;
    return j;
}

CheckResult check_from(const ojson &j) {
    return {j.at("name").get<std::string>(),     j.at("group").get<std::string>(),
            j.at("required").get<bool>(),        j.at("expectation").get<std::string>(),
            j.at("passed").get<bool>(),          j.at("deviation").get<double>(),
            j.at("tolerance").get<double>(),     j.at("detail").get<std::string>()};
}

// Commands -------------------------------------------------------------------

std::vector<protocol::BooleanFunction> requested_functions(const RunRequest &r) {
    if (*r.function_id == "all") {
        return protocol::catalog_functions();
    }
    return {protocol::BooleanFunction::from_id(*r.function_id)};
}

struct RunSetup {
    ensemble::EnsembleConfig config;
    std::optional<params::FeasibilityReport> feasibility;
};

RunSetup setup_for(const RunRequest &r) {
    if (r.medium) {
        params::FeasibilityReport f =
            params::required_detuning(params::load_medium(*r.medium));
        return {params::config_from(f), std::move(f)};
    }
    return {ensemble::EnsembleConfig::with_theta(1, kPi / 2), std::nullopt};
}

std::string format_space(const SpaceLabel &s) {
    std::string out;
    for (const auto &sub : s.subsystems()) {
        if (!out.empty()) {
            out += " x ";
        }
        out += sub.name + "[" + std::to_string(sub.dim) + "]";
    }
    return out;
}

FunctionReport summarize(const protocol::ProtocolTrace &t) {
    const protocol::BooleanFunction &f = t.function();
    FunctionReport r;
    r.id = f.label();
    r.table = f.table();
    r.expected_classification = protocol::to_string(f.classification());
    r.mode = protocol::to_string(t.mode());
    r.n_atoms = t.n_atoms();
    r.ensemble_evolutions = t.ensemble_evolutions();
    r.post_selection_probability = t.post_selection_probability();
    const ProbabilityTable dist = t.final_distribution();
    double total = 0.0;
    for (const auto &[pattern, p] : dist) {
        r.distribution.push_back({pattern, optics::clicks_for(pattern), p});
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        fail(ErrorKind::Numerical, "pattern distribution does not sum to 1");
    }
    const protocol::ProtocolOutcome o = t.outcome();
    r.pattern = o.pattern;
    r.classification = protocol::to_string(o.classification);
    r.function_pair = o.function_pair;
    r.top_probability = t.top_probability();
    r.deterministic = r.top_probability >= 1.0 - protocol::kDeterministicTol;
    // A spread-out distribution has no meaningful top pattern.
    if (!r.deterministic) {
        r.classification = "undetermined";
    }
    r.agrees_with_table = r.deterministic && o.classification == f.classification();
    r.oracle_steps = t.oracle_steps();
    r.warnings = t.warnings();
    return r;
}

std::vector<FunctionReport>
run_functions(const RunRequest &req, const RunSetup &setup, bool with_trace) {
    const auto fns = requested_functions(req);
    std::vector<std::future<FunctionReport>> jobs;
    for (const auto &f : fns) {
        jobs.push_back(std::async(std::launch::async, [&, f] {
            const protocol::ProtocolTrace t =
                protocol::run_protocol(f, req.mode, setup.config);
            FunctionReport r = summarize(t);
            r.theta = setup.config.theta();
            if (req.n_atoms_oracle) {
                r.oracle_check = oracle_check(f, req.mode, *req.n_atoms_oracle);
            }
            if (req.shots > 0) {
                ProbabilityTable dist;
                for (const auto &p : r.distribution) {
                    dist[p.pattern] = p.probability;
                }
                SampleSummary s;
                s.shots = req.shots;
                s.seed = req.seed;
                std::uint64_t hits = 0;
                for (const auto &[pattern, n] :
                     sample_shots(dist, req.shots, req.seed)) {
                    s.counts.push_back({pattern, optics::clicks_for(pattern), n});
                    if (protocol::classify(pattern).classification ==
                        f.classification()) {
                        hits += n;
                    }
                }
                s.classification_rate =
                    static_cast<double>(hits) / static_cast<double>(req.shots);
                r.samples = std::move(s);
            }
            if (with_trace) {
                for (const auto &stage : t.stages()) {
                    const StateVector v = stage.state.materialize();
                    TraceStage ts{stage.name, format_space(v.space()), {}};
                    ts.amplitudes.reserve(v.dim());
                    for (std::size_t i = 0; i < v.dim(); ++i) {
                        ts.amplitudes.push_back({v[i].real(), v[i].imag()});
                    }
                    r.trace.push_back(std::move(ts));
                }
            }
            return r;
        }));
    }
    std::vector<FunctionReport> out;
    for (auto &j : jobs) {
        out.push_back(j.get());
    }
    return out;
}

std::string fmt(double v, int prec = 6) {
    std::ostringstream os;
    os << std::setprecision(prec) << v;
    return os.str();
}

std::string pattern_text(const Outcome &p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        s += (i ? "," : "") + std::to_string(p[i]);
    }
    return s + ")";
}

} // namespace

std::string to_string(Command c) {
    switch (c) {
    case Command::Run:
        return "run";
    case Command::Verify:
        return "verify";
    case Command::Params:
        return "params";
    case Command::Sample:
        return "sample";
    case Command::Trace:
        return "trace";
    }
    return "run";
}

Command parse_command(std::string_view s) {
    for (Command c : {Command::Run, Command::Verify, Command::Params,
                      Command::Sample, Command::Trace}) {
        if (s == to_string(c)) {
            return c;
        }
    }
    fail(ErrorKind::InvalidArgument, "unknown command '" + std::string(s) + "'");
}

void RunRequest::validate() const {
    const bool needs_function = command == Command::Run ||
                                command == Command::Sample ||
                                command == Command::Trace;
    if (needs_function) {
        if (!function_id) {
            fail(ErrorKind::InvalidArgument,
                 to_string(command) + " needs --function (f1..f8 or all)");
        }
        if (*function_id != "all") {
            (void)protocol::BooleanFunction::from_id(*function_id);
        }
    }
    if (command == Command::Sample && shots == 0) {
        fail(ErrorKind::InvalidArgument, "sample needs --shots >= 1");
    }
    if (command == Command::Params && !medium) {
        fail(ErrorKind::InvalidArgument,
             "params needs --medium (cs-cell, rb-mot or a JSON file)");
    }
    if (n_atoms_oracle &&
        (*n_atoms_oracle == 0 || *n_atoms_oracle > sim::kMaxNaiveAtoms)) {
        fail(ErrorKind::InvalidArgument,
             "--n-atoms-oracle must be in 1.." +
                 std::to_string(sim::kMaxNaiveAtoms));
    }
}

std::string to_json(const RunReport &r, int indent) {
    ojson j;
    j["schema"] = r.schema;
    j["request"] = request_json(r.request);
    ojson fns = ojson::array();
    for (const auto &f : r.functions) {
        fns.push_back(function_json(f));
    }
    j["functions"] = fns;
    ojson checks = ojson::array();
    for (const auto &c : r.checks) {
        checks.push_back(check_json(c));
    }
    j["checks"] = checks;
    j["feasibility"] = r.feasibility ? feasibility_json(*r.feasibility) : ojson(nullptr);
    j["exit_code"] = r.exit_code;
    return j.dump(indent);
}

RunReport from_json(std::string_view text) {
    try {
        const ojson j = ojson::parse(text);
        RunReport r;
        r.schema = j.at("schema").get<std::string>();
        if (r.schema != kSchema) {
            fail(ErrorKind::InvalidArgument,
                 "unsupported report schema '" + r.schema + "'");
        }
        r.request = request_from(j.at("request"));
        for (const auto &f : j.at("functions")) {
            r.functions.push_back(function_from(f));
        }
        for (const auto &c : j.at("checks")) {
            r.checks.push_back(check_from(c));
        }
        if (const ojson &f = j.at("feasibility"); !f.is_null()) {
            r.feasibility = feasibility_from(f);
        }
        r.exit_code = j.at("exit_code").get<int>();
        return r;
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::InvalidArgument, std::string("malformed report: ") + e.what());
    }
}

std::string render_table(const RunReport &r) {
    std::ostringstream os;
    os << "djsim " << to_string(r.request.command) << " (" << r.schema << ")\n";
    if (!r.functions.empty()) {
        os << std::left << std::setw(6) << "f" << std::setw(7) << "mode"
           << std::setw(10) << "pattern" << std::setw(12) << "clicks"
           << std::setw(14) << "class" << std::setw(8) << "pair"
           << std::setw(12) << "p(top)" << "table\n";
        for (const auto &f : r.functions) {
            const auto clicks = optics::clicks_for(f.pattern);
            os << std::setw(6) << f.id << std::setw(7) << f.mode << std::setw(10)
               << pattern_text(f.pattern) << std::setw(12)
               << (clicks[0] + "," + clicks[1]) << std::setw(14) << f.classification
               << std::setw(8)
               << (f.classification == "undetermined"
                       ? std::string("-")
                       : f.function_pair[0] + "/" + f.function_pair[1])
               << std::setw(12) << fmt(f.top_probability, 10)
               << (f.agrees_with_table ? "agrees" : "DISAGREES") << "\n";
            if (f.samples) {
                os << "      shots " << f.samples->shots << " seed " << f.samples->seed
                   << ":";
                for (const auto &c : f.samples->counts) {
                    os << " " << c.clicks[0] << "+" << c.clicks[1] << "=" << c.count;
                }
                os << "  rate " << fmt(f.samples->classification_rate) << "\n";
            }
            for (const auto &st : f.trace) {
                std::size_t nonzero = 0;
                for (const auto &a : st.amplitudes) {
                    nonzero += (a[0] * a[0] + a[1] * a[1] > 1e-24) ? 1 : 0;
                }
                os << "      " << std::setw(28) << st.name << st.space << ", " << nonzero
                   << "/" << st.amplitudes.size() << " amplitudes nonzero\n";
            }
            if (f.oracle_check) {
                os << "      oracle N=" << f.oracle_check->n_atoms << " vs "
                   << f.oracle_check->reference << ": dev "
                   << fmt(f.oracle_check->max_deviation, 3)
                   << (f.oracle_check->passed ? " ok" : " FAIL") << "\n";
            }
        }
    }
    if (!r.checks.empty()) {
        std::size_t failed = 0;
        for (const auto &c : r.checks) {
            os << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(46) << c.name << std::right
               << " dev " << std::setw(11) << fmt(c.deviation, 3) << " tol "
               << std::setw(9) << fmt(c.tolerance, 2)
               << (c.required ? "" : " [info]")
               << (c.expectation == "pass" ? "" : " [" + c.expectation + "]")
               << "\n";
            if (!c.passed && c.required) {
                ++failed;
            }
        }
        os << r.checks.size() << " checks, " << failed << " required failing\n";
    }
    if (r.feasibility) {
        const auto &f = *r.feasibility;
        os << "medium " << f.medium.name << ": L=" << fmt(f.medium.length_m)
           << " m, N=" << f.medium.n_atoms << ", g=" << fmt(f.medium.coupling_rad_s)
           << " rad/s\n"
           << "  T = " << fmt(f.transit_time_s) << " s\n"
           << "  Delta = " << fmt(f.detuning_rad_s) << " rad/s (Delta/2pi = "
           << fmt(f.detuning_cyclic_hz) << " Hz)\n"
           << "  Delta/g = " << fmt(f.ratio) << (f.dispersive_ok ? " ok" : " LOW")
           << "\n"
           << "  tau/T = " << fmt(f.decoherence_margin)
           << (f.decoherence_ok ? " ok" : " LOW") << "\n";
        for (const auto &n : f.notes) {
            os << "  note: " << n << "\n";
        }
    }
    os << "exit code " << r.exit_code << "\n";
    return os.str();
}

OracleCheck oracle_check(const protocol::BooleanFunction &f, protocol::Mode mode,
                         std::uint64_t n_atoms) {
    OracleCheck c;
    c.n_atoms = n_atoms;
    c.reference = "naive";
    if (mode == protocol::Mode::Paper &&
        f.classification() == protocol::Classification::Balanced) {
        c.note = "the declared map has no per-atom form; compared the exact "
                 "evolution instead";
    }
    const auto steps = protocol::protocol_steps(f, protocol::Mode::Exact, kPi / 2);
    const auto atoms = ensemble::AtomState::excited(n_atoms);
    const StateVector photons = optics::source_and_initialize();
    const StateVector naive = sim::full_simulate_naive(n_atoms, atoms, photons, steps);
    const StateVector dicke = sim::full_simulate_dicke(n_atoms, atoms, photons, steps);
    const sim::DickeProjection p = sim::project_to_dicke(naive);
    double dev = std::abs(p.residual_weight);
    for (Eigen::Index k = 0; k < p.amplitudes.rows(); ++k) {
        for (Eigen::Index ph = 0; ph < 4; ++ph) {
            dev = std::max(dev, std::abs(p.amplitudes(k, ph) -
                                         dicke[static_cast<std::size_t>(4 * k + ph)]));
        }
    }
    c.max_deviation = dev;
    c.passed = dev <= c.tolerance;
    return c;
}

RunReport cmd_run(const RunRequest &request) {
    request.validate();
    const RunSetup setup = setup_for(request);
    RunReport r;
    r.request = request;
    r.feasibility = setup.feasibility;
    r.functions = run_functions(request, setup, false);
    for (const auto &f : r.functions) {
        if (f.oracle_check && !f.oracle_check->passed) {
            r.exit_code = kExitVerificationFailed;
        }
    }
    return r;
}

RunReport cmd_sample(const RunRequest &request) {
    request.validate();
    return cmd_run(request);
}

RunReport cmd_trace(const RunRequest &request) {
    request.validate();
    const RunSetup setup = setup_for(request);
    if (setup.config.n_atoms() > kMaxTraceAtoms) {
        fail(ErrorKind::Unsupported,
             "trace dumps (N+1) x 4 amplitudes per stage; N = " +
                 std::to_string(setup.config.n_atoms()) + " exceeds " +
                 std::to_string(kMaxTraceAtoms));
    }
    RunReport r;
    r.request = request;
    r.feasibility = setup.feasibility;
    r.functions = run_functions(request, setup, true);
    return r;
}

RunReport cmd_params(const RunRequest &request) {
    request.validate();
    RunReport r;
    r.request = request;
    r.feasibility = params::required_detuning(params::load_medium(*request.medium));
    return r;
}

RunReport cmd_verify(const RunRequest &request) {
    request.validate();
    RunReport r;
    r.request = request;
    r.checks = verification_checks(
        request.n_atoms_oracle.value_or(kDefaultVerifyOracleAtoms));
    for (const auto &c : r.checks) {
        if (c.required && !c.passed) {
            r.exit_code = kExitVerificationFailed;
        }
    }
    return r;
}

RunReport execute(const RunRequest &request) {
    switch (request.command) {
    case Command::Run:
        return cmd_run(request);
    case Command::Verify:
        return cmd_verify(request);
    case Command::Params:
        return cmd_params(request);
    case Command::Sample:
        return cmd_sample(request);
    case Command::Trace:
        return cmd_trace(request);
    }
    fail(ErrorKind::InvalidArgument, "unknown command");
}

} // namespace djsim::report
