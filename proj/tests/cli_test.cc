// Copyright 2026 The qlr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.h"
#include "report.h"
#include "support/generators.h"

using namespace qlr;
using namespace qlr::cli;
using qlr::testing::data_path;
using nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string bell() {
    return data_path("bell.json");
}

std::string fig1() {
    return data_path("fig1.json");
}

}  // namespace

TEST(cli_check, exit_codes) {
    EXPECT_EQ(run({"check", bell(), "--erasures", "1"}).code, kOk);
    CliRun xx = run({"check", data_path("xx.json"), "--erasures", "1"});
    EXPECT_EQ(xx.code, kNegative);
    EXPECT_NE(xx.out.find("(10|00)"), std::string::npos) << xx.out;
    // Bell has no logical qudit, so even a full erasure is correctable.
    EXPECT_EQ(run({"check", bell(), "--erasures", "1,2"}).code, kOk);
    EXPECT_EQ(run({"check", data_path("xx.json"), "--erasures", "1,2"}).code, kNegative);
    EXPECT_EQ(run({"check", bell(), "--erasures", ""}).code, kOk);
    EXPECT_EQ(run({"check", bell(), "--erasures", "3"}).code, kInputError);
    EXPECT_EQ(run({"check", bell(), "--erasures", "x"}).code, kInputError);
    EXPECT_EQ(run({"check", bell(), "--erasures", "1,,2"}).code, kInputError);
    EXPECT_EQ(run({"check", bell()}).code, kInputError);
    EXPECT_EQ(run({"check", "--erasures", "1"}).code, kInputError);
    EXPECT_EQ(run({"check", "/nonexistent.json", "--erasures", "1"}).code, kInputError);
}

TEST(cli_check, truncated_file) {
    auto tmp = std::filesystem::temp_directory_path() / "qlr_cli_test_truncated.json";
    std::ofstream(tmp) << R"({"p": 2, "n": 2, "gener)";
    CliRun r = run({"check", tmp.string(), "--erasures", "1"});
    EXPECT_EQ(r.code, kInputError);
    EXPECT_NE(r.err.find(":1:"), std::string::npos) << r.err;
    std::filesystem::remove(tmp);
}

TEST(cli_check, json_output) {
    CliRun r = run({"check", data_path("xx.json"), "--erasures", "1", "--format", "json"});
    json j = json::parse(r.out);
    EXPECT_FALSE(j["correctable"].get<bool>());
    EXPECT_EQ(j["witness"], "(10|00)");
    EXPECT_EQ(run({"check", bell(), "--erasures", "1", "--format", "xml"}).code, kInputError);
}

TEST(cli_plan, fig1_e7) {
    CliRun r = run({"plan", "--surface", fig1(), "--erasures", "e7", "--format", "json"});
    ASSERT_EQ(r.code, kOk) << r.err;
    PlanReport rep = report_from_json(json::parse(r.out));
    EXPECT_EQ(rep.faces, std::vector<std::string>{"f3"});
    EXPECT_EQ(rep.vertices, std::vector<std::string>{"v2"});
    EXPECT_EQ(rep.recovering_set, (std::vector<std::string>{"e1", "e5", "e6", "e7", "e8"}));
    EXPECT_EQ(rep.plan_dim, 2u);
    EXPECT_EQ(rep.baseline_dim, 7u);
    EXPECT_EQ(rep.n, 8u);
}

TEST(cli_plan, fig1_e8_table) {
    CliRun r = run({"plan", "--surface", fig1(), "--erasures", "e8"});
    ASSERT_EQ(r.code, kOk) << r.err;
    EXPECT_NE(r.out.find("f3"), std::string::npos);
    EXPECT_NE(r.out.find("v1"), std::string::npos);
    EXPECT_NE(r.out.find("e1, e2, e3, e6, e7, e8"), std::string::npos) << r.out;
}

TEST(cli_plan, report_round_trip) {
    for (const auto &args : std::vector<std::vector<std::string>>{
             {"plan", bell(), "--erasures", "1", "--format", "json"},
             {"plan", data_path("c422.json"), "--erasures", "2", "--format", "json"},
             {"plan", data_path("qutrit.json"), "--erasures", "", "--format", "json"},
             {"plan", "--surface", fig1(), "--erasures", "e1,e2", "--format", "json"}}) {
        CliRun r = run(args);
        ASSERT_EQ(r.code, kOk) << r.err;
        json j = json::parse(r.out);
        PlanReport rep = report_from_json(j);
        EXPECT_EQ(to_json(rep), j);
        EXPECT_EQ(report_from_json(to_json(rep)), rep);
    }
}

TEST(cli_plan, uncorrectable_and_bad_edges) {
    EXPECT_EQ(run({"plan", data_path("xx.json"), "--erasures", "1"}).code, kNegative);
    EXPECT_EQ(run({"plan", "--surface", fig1(), "--erasures", "e99"}).code, kInputError);
    EXPECT_EQ(run({"plan", "--surface", fig1(), "--erasures", "e1,e1"}).code, kInputError);
    EXPECT_EQ(run({"plan", bell(), "--surface", fig1(), "--erasures", "1"}).code, kInputError);
}

TEST(cli_decode, bell) {
    CliRun r = run({"decode", bell(), "--erasures", "1", "--syndrome", "0,1"});
    ASSERT_EQ(r.code, kOk) << r.err;
    EXPECT_EQ(r.out, "error (10|00)\n");
    EXPECT_EQ(run({"decode", bell(), "--erasures", "1", "--syndrome", "1"}).code, kInputError);
    EXPECT_EQ(run({"decode", bell(), "--erasures", "1", "--syndrome", "0,2"}).code, kInputError);
    CliRun j = run({"decode", bell(), "--erasures", "1", "--syndrome", "1,0", "--format", "json"});
    EXPECT_EQ(json::parse(j.out)["error"], "(00|10)");
}

TEST(cli_decode, surface_round_trip) {
    // fig1 with e7 erased: the plan measures f3 then v2.
    CliRun r = run({"decode", "--surface", fig1(), "--erasures", "e7", "--syndrome", "1,1", "--format", "json"});
    ASSERT_EQ(r.code, kOk) << r.err;
    json j = json::parse(r.out);
    EXPECT_EQ(j["support"], json::array({"e7"}));
}

TEST(cli_locality, examples) {
    CliRun r = run({"locality", "--surface", fig1(), "--single"});
    ASSERT_EQ(r.code, kOk) << r.err;
    EXPECT_EQ(r.out, "r = 5\n");
    CliRun sq = run({"locality", "--surface", data_path("square.json"), "--delta", "2", "--format", "json"});
    EXPECT_EQ(json::parse(sq.out)["r"], 3);
    EXPECT_EQ(run({"locality", "--surface", fig1(), "--delta", "0"}).code, kInputError);
    EXPECT_EQ(run({"locality", "--surface", fig1()}).code, kInputError);
    EXPECT_EQ(run({"locality", "--surface", fig1(), "--delta", "9"}).code, kInputError);
    EXPECT_EQ(run({"locality", bell(), "--delta", "1"}).code, kInputError);
}

TEST(cli_worst_case, examples) {
    CliRun r = run({"worst-case", bell(), "--delta", "1", "--format", "json"});
    ASSERT_EQ(r.code, kOk) << r.err;
    EXPECT_EQ(json::parse(r.out)["measurements"], 2);
    EXPECT_EQ(json::parse(r.out)["witness"], json::array({1}));
    CliRun f = run({"worst-case", "--surface", fig1(), "--delta", "1"});
    EXPECT_EQ(f.code, kOk);
    EXPECT_NE(f.out.find("worst case 2 measurements"), std::string::npos) << f.out;
    EXPECT_EQ(json::parse(run({"worst-case", bell(), "--delta", "0", "--format", "json"}).out)["measurements"], 0);
    EXPECT_EQ(run({"worst-case", bell(), "--delta", "3"}).code, kInputError);
}

TEST(cli_min_fixed, examples) {
    CliRun r = run({"min-fixed", bell(), "--delta", "1", "--format", "json"});
    ASSERT_EQ(r.code, kOk) << r.err;
    EXPECT_EQ(json::parse(r.out)["dim"], 2);
    EXPECT_EQ(json::parse(run({"min-fixed", data_path("c422.json"), "--delta", "1", "--format", "json"}).out)["dim"],
              2);
    EXPECT_EQ(run({"min-fixed", bell(), "--delta", "2"}).code, kOk);
    EXPECT_EQ(run({"min-fixed", data_path("xx.json"), "--delta", "1"}).code, kNegative);
    EXPECT_EQ(run({"min-fixed", "--surface", data_path("square.json"), "--delta", "1"}).code, kOk);
}

TEST(cli, usage_errors) {
    EXPECT_EQ(run({}).code, kInputError);
    EXPECT_EQ(run({"frobnicate"}).code, kInputError);
    EXPECT_EQ(run({"--help"}).code, kOk);
}
