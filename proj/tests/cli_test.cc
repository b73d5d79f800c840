// Copyright 2026 The ebitcalc Authors
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

#include "ebitcalc/cli.h"

#include <sstream>

#include "gtest/gtest.h"
#include "test_util.h"

using namespace ebitcalc;
using ebitcalc::testing::data_path;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ebits_text) {
    CliRun r = run({"ebits", data_path("single_qubit_zx.qcheck")});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    ASSERT_EQ(r.out, "ebits: 1\ncode: [[1, 0; 1]]\nn: 1, generators: 2, logical: 0, ancillas: 0\n");
    ASSERT_EQ(r.err, "");
}

TEST(Cli, quiet_prints_only_the_count) {
    CliRun r = run({"--quiet", "ebits", data_path("five_qubit.qcheck")});
    ASSERT_EQ(r.code, kExitOk);
    ASSERT_EQ(r.out, "0\n");
}

TEST(Cli, json_round_trip) {
    for (const auto &args : std::vector<std::vector<std::string>>{
             {"params", data_path("two_qubit_example.qcheck")},
             {"sgsop", data_path("two_qubit_example.qcheck")},
             {"css", "--d1", "3", "--d2", "3", data_path("hamming74.gf2"), data_path("hamming74.gf2")},
             {"gf4", data_path("gf4_example.gf4")},
             {"qudit", data_path("qutrit.qcheckd")},
             {"cv", data_path("cv_pair.cvcheck")},
             {"conv", data_path("frame5.conv")},
             {"verify", data_path("five_qubit.qcheck")},
         }) {
        CliRun text = run(args);
        std::vector<std::string> json_args = args;
        json_args.insert(json_args.begin(), "--json");
        CliRun js = run(json_args);
        ASSERT_EQ(text.code, kExitOk) << args[0] << ": " << text.err;
        ASSERT_EQ(js.code, kExitOk) << args[0] << ": " << js.err;
        CliResult parsed = CliResult::from_json(nlohmann::json::parse(js.out));
        ASSERT_EQ(parsed.to_text(), text.out) << args[0];
    }
}

TEST(Cli, css_json_fields) {
    CliRun r = run({"--json", "css", "--d1", "3", "--d2", "3", data_path("hamming74.gf2"), data_path("hamming74.gf2")});
    auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["n"], 7);
    ASSERT_EQ(j["logical"], 1);
    ASSERT_EQ(j["ebits"], 0);
    ASSERT_EQ(j["distance"], 3);
    ASSERT_EQ(j["conjectured"], false);
    ASSERT_EQ(j["command"], "css");
}

TEST(Cli, css_single_distance_warns) {
    CliRun r = run({"css", "--d1", "3", data_path("hamming74.gf2"), data_path("hamming74.gf2")});
    ASSERT_EQ(r.code, kExitOk);
    ASSERT_NE(r.err.find("warning"), std::string::npos);
    ASSERT_NE(r.out.find("[[7, 1; 0]]"), std::string::npos);
}

TEST(Cli, convolutional_output_is_marked_conjectured) {
    CliRun r = run({"conv", data_path("frame5.conv")});
    ASSERT_EQ(r.code, kExitOk);
    ASSERT_EQ(r.out.rfind("ebits per frame: 2 (conjectured)\n", 0), 0u);
    ASSERT_NE(r.out.find("code per frame: [[5, 2; 2]] (conjectured)"), std::string::npos);
    r = run({"--json", "conv4", data_path("gf4_conv.conv4")});
    ASSERT_EQ(nlohmann::json::parse(r.out)["conjectured"], true);
    ASSERT_EQ(nlohmann::json::parse(r.out)["ebits"], 0);
    r = run({"--quiet", "conv-css", data_path("css_conv_a.lpoly"), data_path("css_conv_a.lpoly")});
    ASSERT_EQ(r.out, "1\n");
}

TEST(Cli, other_domains) {
    ASSERT_EQ(run({"--quiet", "gf4", data_path("gf4_example.gf4")}).out, "2\n");
    ASSERT_EQ(run({"--quiet", "qudit", data_path("qutrit.qcheckd")}).out, "1\n");
    ASSERT_EQ(run({"--quiet", "cv", data_path("cv_pair.cvcheck")}).out, "1\n");
    CliRun r = run({"qudit", data_path("qutrit.qcheckd")});
    ASSERT_EQ(r.out.rfind("edits: 1\n", 0), 0u);
    r = run({"cv", "--tol", "1e-6", data_path("cv_pair.cvcheck")});
    ASSERT_EQ(r.out.rfind("entangled modes: 1\n", 0), 0u);
}

TEST(Cli, gf4_expand_prints_a_qcheck_file) {
    CliRun r = run({"gf4-expand", data_path("gf4_example.gf4")});
    ASSERT_EQ(r.code, kExitOk);
    ASSERT_EQ(r.out.rfind("qcheck 4 4\n", 0), 0u);
}

TEST(Cli, sgsop_output) {
    CliRun r = run({"sgsop", data_path("two_qubit_example.qcheck")});
    ASSERT_EQ(r.code, kExitOk);
    ASSERT_NE(r.out.find("transform G:\n  100\n  010\n  011\n"), std::string::npos) << r.out;
    ASSERT_NE(r.out.find("pairs: (0,1)\n"), std::string::npos);
    ASSERT_NE(r.out.find("isotropic: 2\n"), std::string::npos);
}

TEST(Cli, exit_codes) {
    CliRun r = run({"ebits", data_path("frame5.conv")});
    ASSERT_EQ(r.code, kExitParse);
    ASSERT_EQ(r.out, "");
    ASSERT_NE(r.err.find("qcheck"), std::string::npos);

    r = run({"ebits", data_path("no-such-file.qcheck")});
    ASSERT_EQ(r.code, kExitUsage);
    ASSERT_EQ(r.out, "");

    ASSERT_EQ(run({}).code, kExitUsage);
    ASSERT_EQ(run({"frobnicate"}).code, kExitUsage);
    ASSERT_EQ(run({"css", data_path("hamming74.gf2")}).code, kExitUsage);

    r = run({"qudit", data_path("composite.qcheckd")});
    ASSERT_EQ(r.code, kExitDomain);
    ASSERT_EQ(r.out, "");

    r = run({"ebits", data_path("dependent.qcheck")});
    ASSERT_EQ(r.code, kExitDomain);
    ASSERT_NE(r.err.find("--reduce"), std::string::npos);

    ASSERT_EQ(run({"verify"}).code, kExitUsage);
    ASSERT_EQ(run({"verify", "--random", "3", data_path("five_qubit.qcheck")}).code, kExitUsage);
    ASSERT_EQ(run({"verify", "--random", "3", "--max-n", "25"}).code, kExitUsage);
}

TEST(Cli, reduce_drops_dependent_rows) {
    CliRun r = run({"--reduce", "ebits", data_path("dependent.qcheck")});
    ASSERT_EQ(r.code, kExitOk);
    ASSERT_NE(r.err.find("dropped dependent generator rows (0-based): 2"), std::string::npos) << r.err;
    r = run({"--reduce", "--quiet", "ebits", data_path("dependent.qcheck")});
    ASSERT_EQ(r.err, "");
}

TEST(Cli, verify) {
    CliRun r = run({"verify", data_path("five_qubit.qcheck")});
    ASSERT_EQ(r.code, kExitOk);
    ASSERT_NE(r.out.find("agreement: yes"), std::string::npos);
    r = run({"verify", "--random", "100", "--max-n", "8", "--seed", "3"});
    ASSERT_EQ(r.code, kExitOk);
    ASSERT_NE(r.out.find("random cases: 100 (max n 8, seed 3)"), std::string::npos);
    ASSERT_NE(r.out.find("failures: 0"), std::string::npos);
    r = run({"--quiet", "verify", "--random", "10"});
    ASSERT_EQ(r.out, "yes\n");
}

TEST(Cli, help) {
    CliRun r = run({"--help"});
    ASSERT_EQ(r.code, kExitOk);
    ASSERT_NE(r.out.find("conv-css"), std::string::npos);
}

TEST(Cli, every_subcommand_rejects_a_wrong_header) {
    const std::string gf2 = data_path("hamming74.gf2");
    const std::string qcheck = data_path("five_qubit.qcheck");
    const std::vector<std::vector<std::string>> cases = {
        {"ebits", gf2},  {"params", gf2},       {"sgsop", gf2},     {"css", qcheck, qcheck},
        {"gf4", qcheck}, {"gf4-expand", qcheck}, {"qudit", gf2},     {"cv", gf2},
        {"conv", gf2},   {"conv4", gf2},         {"conv-css", gf2, gf2}, {"verify", gf2},
    };
    for (const auto &args : cases) {
        for (bool json : {false, true}) {
            std::vector<std::string> full = args;
            if (json) {
                full.insert(full.begin(), "--json");
            }
            CliRun r = run(full);
            ASSERT_EQ(r.code, kExitParse) << args[0];
            ASSERT_EQ(r.out, "") << args[0];
            ASSERT_NE(r.err.find("header"), std::string::npos) << args[0] << ": " << r.err;
        }
    }
}
