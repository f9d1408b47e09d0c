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

// Command-line front end. Talks to the simulator only through the C API.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "djsim/djsim.h"

namespace {

constexpr int kExitUsage = 2;

struct Options {
    std::optional<std::string> function;
    std::string mode = "paper";
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::uint64_t n_atoms_oracle = 0;
    std::optional<std::string> medium;
    std::optional<std::string> out;
    std::string format = "json";
};

CLI::App *add_command(CLI::App &app, const std::string &name,
                      const std::string &help, Options &o) {
    CLI::App *sub = app.add_subcommand(name, help);
    const bool protocol_cmd = name == "run" || name == "sample" || name == "trace";
    if (protocol_cmd) {
        sub->add_option("--function", o.function, "f1..f8 or all")->required();
        sub->add_option("--mode", o.mode, "exact or paper")
            ->check(CLI::IsMember({"exact", "paper"}));
        sub->add_option("--shots", o.shots, "detector shots to sample");
        sub->add_option("--seed", o.seed, "master seed for sampling");
    }
    if (protocol_cmd || name == "verify") {
        sub->add_option("--n-atoms-oracle", o.n_atoms_oracle,
                        "atom count for the brute-force cross-check (1..12)")
            ->check(CLI::Range(1, 12));
    }
    if (name != "verify") {
        auto *m = sub->add_option("--medium", o.medium,
                                  "preset (cs-cell, rb-mot) or JSON medium file");
        if (name == "params") {
            m->required();
        }
    }
    sub->add_option("--out", o.out, "write the JSON report to this file");
    sub->add_option("--format", o.format, "stdout format: json or table")
        ->check(CLI::IsMember({"json", "table"}));
    return sub;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Deutsch-Jozsa photon/atomic-ensemble simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(djsim_version()));
    Options o;
    add_command(app, "run", "run the protocol and report pattern distributions", o);
    add_command(app, "verify", "run every named consistency check", o);
    add_command(app, "params", "feasibility numbers for a medium", o);
    add_command(app, "sample", "sample detector coincidences", o);
    add_command(app, "trace", "dump every intermediate state", o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    djsim_request req;
    djsim_request_init(&req);
    if (djsim_parse_command(name.c_str(), &req.command) != DJSIM_OK) {
        std::cerr << "error: " << djsim_last_error() << "\n";
        return kExitUsage;
    }
    req.function_id = o.function ? o.function->c_str() : nullptr;
    req.mode = o.mode.c_str();
    req.shots = o.shots;
    req.seed = o.seed;
    req.n_atoms_oracle = o.n_atoms_oracle;
    req.medium = o.medium ? o.medium->c_str() : nullptr;
    req.output_path = o.out ? o.out->c_str() : nullptr;

    djsim_report *report = nullptr;
    if (djsim_execute(&req, &report) != DJSIM_OK) {
        std::cerr << "error: " << djsim_last_error() << "\n";
        return kExitUsage;
    }
    int code = djsim_report_exit_code(report);
    if (o.out && djsim_report_write(report, o.out->c_str()) != DJSIM_OK) {
        std::cerr << "error: " << djsim_last_error() << "\n";
        code = kExitUsage;
    }
    if (o.format == "table" || o.out) {
        std::cout << djsim_report_table(report);
    } else {
        std::cout << djsim_report_json(report) << "\n";
    }
    djsim_report_free(report);
    return code;
}
