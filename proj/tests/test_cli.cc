// Copyright 2026 The hwproj Authors
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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hwproj/circuit_io.h"
#include "hwproj/hamming.h"
#include "hwproj/oracle.h"
#include "json.hpp"

using hwproj::cli::run_cli;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
    auto r = run(std::move(args));
    EXPECT_EQ(r.code, 0) << r.err;
    return json::parse(r.out);
}

class TempDir {
   public:
    TempDir() : path_(fs::temp_directory_path() / ("hwproj_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" + std::to_string(counter_++))) {
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    std::string file(const std::string &name) const {
        return (path_ / name).string();
    }

   private:
    static inline int counter_ = 0;
    fs::path path_;
};

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class ScopedEnv {
   public:
    ScopedEnv(const char *name, const char *value) : name_(name) {
        ::setenv(name, value, 1);
    }
    ~ScopedEnv() {
        ::unsetenv(name_);
    }

   private:
    const char *name_;
};

}  // namespace

TEST(CliRun, intro3_exact) {
    auto doc = run_json({"run", "--n", "3", "--variant", "alg2", "--state", "intro3", "--mode", "exact"});
    EXPECT_NEAR(doc["probs"]["0"].get<double>(), 0.25, 1e-10);
    EXPECT_NEAR(doc["probs"]["1"].get<double>(), 0.5, 1e-10);
    EXPECT_NEAR(doc["probs"]["3"].get<double>(), 0.25, 1e-10);
    EXPECT_LT(doc["max_abs_dev"].get<double>(), 1e-10);
    EXPECT_EQ(doc["variant"], "alg2");
}

TEST(CliRun, resets_ghz_shots) {
    auto doc = run_json({"run", "--n", "4", "--variant", "resets", "--state", "ghz", "--mode", "shots", "--shots",
        "10000", "--seed", "7"});
    auto c0 = doc["counts"]["0"].get<int>();
    auto c4 = doc["counts"]["4"].get<int>();
    EXPECT_EQ(c0 + c4, 10000);
    EXPECT_LT(std::abs(c0 - 5000), 150);
    EXPECT_EQ(doc["s"], 4);
}

TEST(CliRun, tradeoff_w_state) {
    auto doc = run_json({"run", "--n", "4", "--variant", "tradeoff", "--s", "2", "--state", "w"});
    EXPECT_NEAR(doc["probs"]["1"].get<double>(), 1, 1e-10);
}

TEST(CliRun, csv_output) {
    auto r = run({"run", "--n", "2", "--state", "ones", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("outcome,probability,oracle_probability\n", 0), 0u);
    auto at = r.out.find("\n2,");
    ASSERT_NE(at, std::string::npos) << r.out;
    EXPECT_NEAR(std::stod(r.out.substr(at + 3)), 1, 1e-12);
}

TEST(CliRun, post_states_included_on_request) {
    auto doc = run_json({"run", "--n", "2", "--state", "bellpair-product", "--post-states"});
    ASSERT_TRUE(doc.contains("post_states"));
    EXPECT_EQ(doc["post_states"]["2"].size(), 4u);
}

TEST(CliRun, state_file_input) {
    TempDir dir;
    auto path = dir.file("amps.txt");
    std::ofstream(path) << "# |01> + |10>\n0 0\n0.70710678118654752 0\n0.70710678118654752 0\n0 0\n";
    auto doc = run_json({"run", "--n", "2", "--state-file", path});
    EXPECT_NEAR(doc["probs"]["1"].get<double>(), 1, 1e-10);
}

TEST(CliRun, same_seed_same_output) {
    std::vector<std::string> args = {"run", "--n", "3", "--state", "random", "--seed", "11", "--mode", "shots",
        "--shots", "500"};
    EXPECT_EQ(run(args).out, run(args).out);
    auto other = args;
    other.back() = "501";
    EXPECT_NE(run(args).out, run(other).out);
}

TEST(CliRun, emit_flag_writes_circuit) {
    TempDir dir;
    auto path = dir.file("c.hwc");
    auto r = run({"run", "--n", "3", "--state", "ghz", "--emit", path});
    ASSERT_EQ(r.code, 0) << r.err;
    auto c = hwproj::parse(slurp(path));
    EXPECT_EQ(c, hwproj::build_alg2(hwproj::derive_params(3)).circuit);
}

TEST(CliVerify, passes_and_reports) {
    auto r = run({"verify", "--n-max", "3", "--seeds", "3", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = json::parse(r.out);
    EXPECT_TRUE(doc["pass"].get<bool>());
    EXPECT_EQ(doc["failures"], 0);
    EXPECT_GT(doc["total"].get<int>(), 0);
}

TEST(CliVerify, tiny_tolerance_fails) {
    EXPECT_EQ(run({"verify", "--n-min", "4", "--n-max", "4", "--seeds", "2", "--tol", "1e-16"}).code, 1);
}

TEST(CliVerify, corrupted_angle_fails) {
    EXPECT_EQ(run({"verify", "--n-max", "3", "--seeds", "2", "--corrupt-angle", "1e-3"}).code, 1);
}

TEST(CliResources, csv_columns) {
    auto r = run({"resources", "--ns", "4,8"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    std::string header, line;
    std::getline(in, header);
    EXPECT_EQ(header,
        "variant,n,s,k,depth,control_qubits,helpers,two_qubit_gates,measurements,resets,depth_per_log,depth_per_nlog");
    int rows = 0;
    while (std::getline(in, line)) {
        rows++;
        EXPECT_EQ(line.rfind("resets,", 0), 0u);
    }
    EXPECT_EQ(rows, 2);
}

TEST(CliResources, s_policy_one_uses_single_control) {
    auto r = run({"resources", "--ns", "8", "--s-policy", "1", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = json::parse(r.out);
    EXPECT_EQ(doc["rows"][0]["control_qubits"], 1);
}

TEST(CliEmit, idempotent_and_parses_back) {
    auto a = run({"emit", "--n", "5", "--variant", "tradeoff", "--s", "2"});
    auto b = run({"emit", "--n", "5", "--variant", "tradeoff", "--s", "2"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    hwproj::HammingCircuit hc = hwproj::build_alg2_tradeoff(hwproj::derive_params(5, 2));
    hc.circuit = hwproj::parse(a.out);
    hwproj::Rng rng(2);
    auto res = hwproj::verify_variant(hc, hwproj::random_state(5, rng), 1e-9);
    EXPECT_TRUE(res.pass) << res.detail;
}

TEST(CliEmit, resets_uses_reset_and_feedback) {
    auto r = run({"emit", "--n", "4", "--variant", "resets"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("reset q"), std::string::npos);
    EXPECT_NE(r.out.find("if (parity("), std::string::npos);
}

TEST(CliEmit, tradeoff_blocks) {
    auto r = run({"emit", "--n", "4", "--variant", "tradeoff", "--s", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto c = hwproj::parse(r.out);
    auto hc = hwproj::build_alg2_tradeoff(hwproj::derive_params(4, 3));
    EXPECT_EQ(hc.layout.control_blocks.size(), 3u);
    EXPECT_EQ(c, hc.circuit);
}

TEST(CliEmit, writes_file) {
    TempDir dir;
    auto path = dir.file("x.hwc");
    auto r = run({"emit", "--n", "2", "--out", path});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(slurp(path).find("crz(pi*1/2) q0, q2"), std::string::npos);
}

TEST(CliErrors, exit_codes) {
    EXPECT_EQ(run({"run", "--n", "3", "--variant", "alg9"}).code, 2);
    EXPECT_EQ(run({"run", "--n", "0"}).code, 2);
    EXPECT_EQ(run({"run", "--n", "3", "--s", "4", "--variant", "tradeoff"}).code, 2);
    EXPECT_EQ(run({"run", "--n", "3", "--state", "nope"}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"run", "--n", "3", "--state-file", "/nonexistent/amps.txt"}).code, 3);
    EXPECT_EQ(run({"run", "--n", "30", "--state", "zeros"}).code, 4);
    EXPECT_EQ(run({"emit", "--n", "2", "--out", "/nonexistent/dir/x.hwc"}).code, 3);
}

TEST(CliErrors, malformed_state_file) {
    TempDir dir;
    auto path = dir.file("bad.txt");
    std::ofstream(path) << "1 0\nnot numbers\n";
    auto r = run({"run", "--n", "1", "--state-file", path});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
    std::ofstream(path) << "1 0\n0 0\n0 0\n";
    EXPECT_EQ(run({"run", "--n", "1", "--state-file", path}).code, 2);
}

TEST(CliErrors, state_file_width_must_match_n) {
    TempDir dir;
    auto path = dir.file("amps.txt");
    std::ofstream(path) << "1 0\n0 0\n";
    EXPECT_EQ(run({"run", "--n", "3", "--state-file", path}).code, 2);
}

TEST(CliErrors, env_cap) {
    {
        ScopedEnv env("HWPROJ_MAX_QUBITS", "5");
        EXPECT_EQ(run({"run", "--n", "4", "--state", "ghz"}).code, 4);
        EXPECT_EQ(run({"run", "--n", "2", "--state", "ghz"}).code, 0);
    }
    {
        ScopedEnv env("HWPROJ_MAX_QUBITS", "abc");
        EXPECT_EQ(run({"run", "--n", "2", "--state", "ghz"}).code, 2);
    }
}
