/* Copyright 2026 The djsim Authors.

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License. */

/*
 * C interface to libdjsim. Every entry point returns a status code and
 * never throws; on failure djsim_last_error() describes the problem for the
 * calling thread. Reports are opaque and owned by the caller.
 */

#ifndef DJSIM_DJSIM_H
#define DJSIM_DJSIM_H

#include <stddef.h>
#include <stdint.h>

#if defined(DJSIM_BUILDING_LIBRARY)
#define DJSIM_API __attribute__((visibility("default")))
#else
#define DJSIM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum djsim_status {
    DJSIM_OK = 0,
    DJSIM_ERR_INVALID_ARGUMENT = 1, /* bad request, unknown id, bad file */
    DJSIM_ERR_PRECONDITION = 2,
    DJSIM_ERR_UNSUPPORTED = 3,
    DJSIM_ERR_NUMERICAL = 4,
    DJSIM_ERR_IO = 5,
    DJSIM_ERR_INTERNAL = 6
} djsim_status;

typedef enum djsim_command {
    DJSIM_CMD_RUN = 0,
    DJSIM_CMD_VERIFY = 1,
    DJSIM_CMD_PARAMS = 2,
    DJSIM_CMD_SAMPLE = 3,
    DJSIM_CMD_TRACE = 4
} djsim_command;

/* Optional strings may be NULL. n_atoms_oracle = 0 means "not requested". */
typedef struct djsim_request {
    djsim_command command;
    const char *function_id; /* "f1".."f8" or "all" */
    const char *mode;        /* "exact" or "paper"; NULL selects paper */
    uint64_t shots;
    uint64_t seed;
    uint64_t n_atoms_oracle;
    const char *medium; /* preset name or JSON file path */
    const char *output_path;
} djsim_request;

typedef struct djsim_report djsim_report;

/* Fills in defaults: run, paper mode, zero shots, seed 0. */
DJSIM_API void djsim_request_init(djsim_request *request);

/* Parses a command name ("run", "verify", ...). */
DJSIM_API djsim_status djsim_parse_command(const char *name,
                                           djsim_command *out);

/* Executes the request. On success *out owns a new report. */
DJSIM_API djsim_status djsim_execute(const djsim_request *request,
                                     djsim_report **out);

/* Parses a serialized report. */
DJSIM_API djsim_status djsim_report_parse(const char *json,
                                          djsim_report **out);

/* Borrowed strings, valid until the report is freed. */
DJSIM_API const char *djsim_report_json(const djsim_report *report);
DJSIM_API const char *djsim_report_table(const djsim_report *report);

/* 0 ok, 1 a required verification failed. */
DJSIM_API int djsim_report_exit_code(const djsim_report *report);

/* Nonzero when both reports hold the same value. */
DJSIM_API int djsim_report_equal(const djsim_report *a, const djsim_report *b);

DJSIM_API djsim_status djsim_report_write(const djsim_report *report,
                                          const char *path);

DJSIM_API void djsim_report_free(djsim_report *report);

/* Message for the last failure on this thread, "" if none. */
DJSIM_API const char *djsim_last_error(void);

DJSIM_API const char *djsim_version(void);

#ifdef __cplusplus
}
#endif

#endif /* DJSIM_DJSIM_H */
