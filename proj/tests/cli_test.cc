// Copyright 2026 The Bellkit Authors
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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "bellkit/io.h"

namespace {

const std::string kData = BELLKIT_TEST_DATA;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = bellkit::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string &name) {
    return kData + "/" + name;
}

}  // namespace

TEST(cli, demo_matches) {
    const Outcome r = run({"demo"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("bell_original: lhs=1.000000000 rhs=0.750000000 VIOLATED"), std::string::npos);
    EXPECT_NE(r.out.find("quantum_analogue: lhs=1.000000000 rhs=1.250000000 holds"), std::string::npos);
    EXPECT_NE(r.out.find("chsh: lhs=1.750000000 rhs=2.000000000 holds"), std::string::npos);
}

TEST(cli, check_exit_codes) {
    const std::vector<std::string> povms{data("spin_a.json"), data("spin_b.json"), data("spin_c.json")};
    auto check = [&](const std::string &state, const std::string &ineq) {
        std::vector<std::string> args{"check", state};
        args.insert(args.end(), povms.begin(), povms.end());
        args.insert(args.end(), {"-i", ineq});
        return run(args);
    };
    EXPECT_EQ(check(data("rho_zero.json"), "bell-original").code, bellkit::cli::kViolated);
    EXPECT_EQ(check(data("rho_zero_symmetric.json"), "quantum-analogue").code, bellkit::cli::kHolds);
    EXPECT_EQ(check(data("rho_zero_representation.json"), "separable-bound").code, bellkit::cli::kHolds);
    EXPECT_EQ(check(data("rho_zero_representation.json"), "two-term").code, bellkit::cli::kInputError);
    EXPECT_EQ(run({"check", data("rho_zero_representation.json"), povms[0], povms[1], povms[2], "-i", "two-term",
                   "--gamma", "1,1"})
                  .code,
              bellkit::cli::kHolds);
    const Outcome bad = check(data("bad_trace.json"), "bell-original");
    EXPECT_EQ(bad.code, bellkit::cli::kInputError);
    EXPECT_NE(bad.err.find("TraceNotOne"), std::string::npos);
    const Outcome missing = check(data("no_such_file.json"), "bell-original");
    EXPECT_EQ(missing.code, bellkit::cli::kInputError);
    EXPECT_EQ(check(data("rho_zero.json"), "no-such-inequality").code, bellkit::cli::kInputError);
    EXPECT_EQ(check(data("rho_zero.json"), "quantum-analogue").code, bellkit::cli::kInputError);
}

TEST(cli, check_chsh_family) {
    const std::vector<std::string> base{"check",           data("rho_zero.json"), data("spin_a.json"),
                                        data("spin_b.json"), data("spin_c.json"),  data("spin_d.json")};
    auto with = [&](std::vector<std::string> extra) {
        std::vector<std::string> args = base;
        args.insert(args.end(), extra.begin(), extra.end());
        return run(args);
    };
    const Outcome chsh = with({"-i", "chsh"});
    EXPECT_EQ(chsh.code, 0);
    EXPECT_NE(chsh.out.find("\"lhs\": 1.750000000"), std::string::npos);
    const Outcome ext = with({"-i", "extended-chsh", "--gamma", "1,1,1,-1"});
    EXPECT_EQ(ext.code, 0);
    EXPECT_NE(ext.out.find("\"lhs\": 1.750000000"), std::string::npos);
    EXPECT_EQ(with({"-i", "extended-chsh", "--gamma", "1,1,1,1"}).code, bellkit::cli::kInputError);
    const Outcome csv = with({"--format", "csv", "-i", "chsh"});
    EXPECT_EQ(csv.out, "name,lhs,rhs,slack,violated,tol\nchsh,1.750000000,2.000000000,0.250000000,false,0.000000001\n");
}

TEST(cli, global_flags) {
    const Outcome r = run({"--tol", "0.5", "check", data("rho_zero.json"), data("spin_a.json"), data("spin_b.json"),
                       data("spin_c.json"), "-i", "bell-original"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"tol\": 0.500000000"), std::string::npos);

    const auto out_path = std::filesystem::temp_directory_path() / "bellkit_cli_test_out.json";
    std::filesystem::remove(out_path);
    const Outcome w = run({"--out", out_path.string(), "classical", data("anticorrelation_model.json")});
    EXPECT_EQ(w.code, 0);
    std::ifstream in(out_path);
    std::stringstream contents;
    contents << in.rdbuf();
    EXPECT_NE(contents.str().find("classical_reports"), std::string::npos);
    std::filesystem::remove(out_path);

    EXPECT_EQ(run({"frobnicate"}).code, bellkit::cli::kInputError);
    EXPECT_EQ(run({}).code, bellkit::cli::kInputError);
    EXPECT_EQ(run({"--format", "xml", "demo"}).code, bellkit::cli::kInputError);
}

TEST(cli, classical_commands) {
    const Outcome anti = run({"classical", data("anticorrelation_model.json")});
    EXPECT_EQ(anti.code, 0);
    const Outcome random = run({"classical", "--random", "42", "1000"});
    EXPECT_EQ(random.code, 0);
    EXPECT_EQ(random.out, run({"classical", "--random", "42", "1000"}).out);
    const Outcome bad = run({"classical", data("bad_distribution_model.json")});
    EXPECT_EQ(bad.code, bellkit::cli::kInputError);
    EXPECT_NE(bad.err.find("InvalidDistribution"), std::string::npos);
}

TEST(cli, sweep_commands) {
    const Outcome bell = run({"sweep", data("sweep_bell.json")});
    EXPECT_EQ(bell.code, bellkit::cli::kViolated);
    EXPECT_NE(bell.out.find("slack=-2.000000000"), std::string::npos);
    const Outcome chsh = run({"sweep", data("sweep_chsh.json")});
    EXPECT_EQ(chsh.code, 0);
    EXPECT_NE(chsh.out.find("lhs=2.000000000"), std::string::npos);
    const Outcome sound = run({"--threads", "4", "sweep", data("sweep_soundness.json")});
    EXPECT_EQ(sound.code, 0);
    EXPECT_NE(sound.out.find("PASS"), std::string::npos);
    EXPECT_EQ(sound.out, run({"sweep", data("sweep_soundness.json")}).out);
    const Outcome csv = run({"--format", "csv", "sweep", data("sweep_chsh.json")});
    EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "setting0,setting1,setting2,setting3,lhs,rhs,slack,violated");
}

TEST(cli, schema_is_json) {
    const Outcome r = run({"schema"});
    EXPECT_EQ(r.code, 0);
    const auto j = bellkit::io::Json::parse(r.out);
    EXPECT_TRUE(j.contains("sweep_config"));
}
