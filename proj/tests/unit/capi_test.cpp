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


#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "djsim/djsim.h"

namespace {

struct ReportHandle {
    djsim_report *p = nullptr;
    ~ReportHandle() { djsim_report_free(p); }
};

djsim_request run_request(const char *fn) {
    djsim_request r;
    djsim_request_init(&r);
    r.command = DJSIM_CMD_RUN;
    r.function_id = fn;
    return r;
}

TEST(CApi, DefaultsAndVersion) {
    djsim_request r;
    std::memset(&r, 0xff, sizeof r);
    djsim_request_init(&r);
    EXPECT_EQ(r.command, DJSIM_CMD_RUN);
    EXPECT_EQ(r.function_id, nullptr);
    EXPECT_EQ(r.mode, nullptr);
    EXPECT_EQ(r.shots, 0u);
    EXPECT_EQ(r.n_atoms_oracle, 0u);
    EXPECT_STREQ(djsim_version(), "1.0.0");
}

TEST(CApi, ParseCommand) {
    djsim_command c;
    EXPECT_EQ(djsim_parse_command("sample", &c), DJSIM_OK);
    EXPECT_EQ(c, DJSIM_CMD_SAMPLE);
    EXPECT_EQ(djsim_parse_command("dance", &c), DJSIM_ERR_INVALID_ARGUMENT);
    EXPECT_NE(std::string(djsim_last_error()), "");
    EXPECT_EQ(djsim_parse_command(nullptr, &c), DJSIM_ERR_INVALID_ARGUMENT);
}

TEST(CApi, RunProducesVersionedJson) {
    const djsim_request r = run_request("f5");
    ReportHandle h;
    ASSERT_EQ(djsim_execute(&r, &h.p), DJSIM_OK);
    const std::string json = djsim_report_json(h.p);
    EXPECT_EQ(json.rfind("{\n  \"schema\": \"djsim.report/1\"", 0), 0u);
    EXPECT_NE(json.find("\"VD1\""), std::string::npos);
    EXPECT_EQ(djsim_report_exit_code(h.p), 0);
    EXPECT_NE(std::string(djsim_report_table(h.p)).find("f5"), std::string::npos);
}

TEST(CApi, ParseRoundTripAndEquality) {
    const djsim_request r = run_request("all");
    ReportHandle a, b, c;
    ASSERT_EQ(djsim_execute(&r, &a.p), DJSIM_OK);
    ASSERT_EQ(djsim_report_parse(djsim_report_json(a.p), &b.p), DJSIM_OK);
    EXPECT_NE(djsim_report_equal(a.p, b.p), 0);
    const djsim_request other = run_request("f1");
    ASSERT_EQ(djsim_execute(&other, &c.p), DJSIM_OK);
    EXPECT_EQ(djsim_report_equal(a.p, c.p), 0);
    djsim_report *bad = nullptr;
    EXPECT_EQ(djsim_report_parse("{not json", &bad), DJSIM_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(bad, nullptr);
}

TEST(CApi, ErrorsMapToStatusCodes) {
    djsim_report *out = nullptr;
    djsim_request r = run_request("f42");
    EXPECT_EQ(djsim_execute(&r, &out), DJSIM_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(out, nullptr);
    r = run_request("f1");
    r.mode = "sideways";
    EXPECT_EQ(djsim_execute(&r, &out), DJSIM_ERR_INVALID_ARGUMENT);
    r = run_request("f3");
    r.command = DJSIM_CMD_TRACE;
    r.medium = "cs-cell";
    EXPECT_EQ(djsim_execute(&r, &out), DJSIM_ERR_UNSUPPORTED);
    EXPECT_EQ(djsim_execute(nullptr, &out), DJSIM_ERR_INVALID_ARGUMENT);
    r = run_request("f1");
    EXPECT_EQ(djsim_execute(&r, nullptr), DJSIM_ERR_INVALID_ARGUMENT);
}

TEST(CApi, WriteReport) {
    djsim_request r;
    djsim_request_init(&r);
    r.command = DJSIM_CMD_PARAMS;
    r.medium = "rb-mot";
    ReportHandle h;
    ASSERT_EQ(djsim_execute(&r, &h.p), DJSIM_OK);
    const std::string path = ::testing::TempDir() + "djsim_capi_report.json";
    ASSERT_EQ(djsim_report_write(h.p, path.c_str()), DJSIM_OK);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_EQ(buf.str(), std::string(djsim_report_json(h.p)) + "\n");
    EXPECT_EQ(djsim_report_write(h.p, "/nonexistent-dir/x.json"), DJSIM_ERR_IO);
    std::remove(path.c_str());
}

} // namespace
