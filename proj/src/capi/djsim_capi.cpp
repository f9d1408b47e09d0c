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

#include "djsim/djsim.h"

#include <exception>
#include <fstream>
#include <string>

#include "djsim/error.hpp"
#include "djsim/report.hpp"

struct djsim_report {
    djsim::report::RunReport value;
    std::string json;
    std::string table;
};

namespace {

thread_local std::string g_last_error;

djsim_status status_for(djsim::ErrorKind k) {
    switch (k) {
    case djsim::ErrorKind::InvalidArgument:
        return DJSIM_ERR_INVALID_ARGUMENT;
    case djsim::ErrorKind::Precondition:
        return DJSIM_ERR_PRECONDITION;
    case djsim::ErrorKind::Unsupported:
        return DJSIM_ERR_UNSUPPORTED;
    case djsim::ErrorKind::Numerical:
        return DJSIM_ERR_NUMERICAL;
    }
    return DJSIM_ERR_INTERNAL;
}

template <class F> djsim_status guarded(F &&body) {
    try {
        g_last_error.clear();
        body();
        return DJSIM_OK;
    } catch (const djsim::Error &e) {
        g_last_error = e.what();
        return status_for(e.kind());
    } catch (const std::exception &e) {
        g_last_error = e.what();
        return DJSIM_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return DJSIM_ERR_INTERNAL;
    }
}

djsim_report *wrap(djsim::report::RunReport r) {
    auto *h = new djsim_report{std::move(r), {}, {}};
    h->json = djsim::report::to_json(h->value);
    h->table = djsim::report::render_table(h->value);
    return h;
}

djsim::report::Command command_of(djsim_command c) {
    using djsim::report::Command;
    switch (c) {
    case DJSIM_CMD_RUN:
        return Command::Run;
    case DJSIM_CMD_VERIFY:
        return Command::Verify;
    case DJSIM_CMD_PARAMS:
        return Command::Params;
    case DJSIM_CMD_SAMPLE:
        return Command::Sample;
    case DJSIM_CMD_TRACE:
        return Command::Trace;
    }
    djsim::fail(djsim::ErrorKind::InvalidArgument, "unknown command code");
}

} // namespace

extern "C" {

void djsim_request_init(djsim_request *request) {
    if (request != nullptr) {
        *request = djsim_request{DJSIM_CMD_RUN, nullptr, nullptr, 0, 0, 0,
                                 nullptr, nullptr};
    }
}

djsim_status djsim_parse_command(const char *name, djsim_command *out) {
    return guarded([&] {
        if (name == nullptr || out == nullptr) {
            djsim::fail(djsim::ErrorKind::InvalidArgument, "null argument");
        }
        *out = static_cast<djsim_command>(
            static_cast<int>(djsim::report::parse_command(name)));
    });
}

djsim_status djsim_execute(const djsim_request *request, djsim_report **out) {
    return guarded([&] {
        if (request == nullptr || out == nullptr) {
            djsim::fail(djsim::ErrorKind::InvalidArgument, "null argument");
        }
        *out = nullptr;
        djsim::report::RunRequest r;
        r.command = command_of(request->command);
        if (request->function_id != nullptr) {
            r.function_id = request->function_id;
        }
        if (request->mode != nullptr) {
            r.mode = djsim::protocol::parse_mode(request->mode);
        }
        r.shots = request->shots;
        r.seed = request->seed;
        if (request->n_atoms_oracle != 0) {
            r.n_atoms_oracle = request->n_atoms_oracle;
        }
        if (request->medium != nullptr) {
            r.medium = request->medium;
        }
        if (request->output_path != nullptr) {
            r.output_path = request->output_path;
        }
        *out = wrap(djsim::report::execute(r));
    });
}

djsim_status djsim_report_parse(const char *json, djsim_report **out) {
    return guarded([&] {
        if (json == nullptr || out == nullptr) {
            djsim::fail(djsim::ErrorKind::InvalidArgument, "null argument");
        }
        *out = nullptr;
        *out = wrap(djsim::report::from_json(json));
    });
}

const char *djsim_report_json(const djsim_report *report) {
    return report != nullptr ? report->json.c_str() : "";
}

const char *djsim_report_table(const djsim_report *report) {
    return report != nullptr ? report->table.c_str() : "";
}

int djsim_report_exit_code(const djsim_report *report) {
    return report != nullptr ? report->value.exit_code : djsim::report::kExitUsage;
}

int djsim_report_equal(const djsim_report *a, const djsim_report *b) {
    return a != nullptr && b != nullptr && a->value == b->value ? 1 : 0;
}

djsim_status djsim_report_write(const djsim_report *report, const char *path) {
    const djsim_status s = guarded([&] {
        if (report == nullptr || path == nullptr) {
            djsim::fail(djsim::ErrorKind::InvalidArgument, "null argument");
        }
    });
    if (s != DJSIM_OK) {
        return s;
    }
    std::ofstream f(path);
    f << report->json << '\n';
    if (!f) {
        g_last_error = std::string("cannot write ") + path;
        return DJSIM_ERR_IO;
    }
    return DJSIM_OK;
}

void djsim_report_free(djsim_report *report) { delete report; }

const char *djsim_last_error(void) { return g_last_error.c_str(); }

const char *djsim_version(void) { return "1.0.0"; }

} // extern "C"
