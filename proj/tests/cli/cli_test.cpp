// Copyright 2026 The genshift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the built genshift binary end to end.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "genshift/json_io.hpp"
#include "genshift/shift_operator.hpp"

namespace genshift {
namespace {

namespace fs = std::filesystem;
using ::testing::HasSubstr;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("genshift_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  RunResult run(const std::string& args, const std::string& env = "") {
    const fs::path out = dir_ / "stdout.txt";
    const fs::path err = dir_ / "stderr.txt";
    const std::string cmd = env + " " + GENSHIFT_CLI_PATH + " " + args + " >" + out.string() +
                            " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
  }

  fs::path dir_;
};

TEST_F(CliTest, AnalyzeConstantMap) {
  const std::string map = write("map.json", R"({"kind":"finite","images":[1,1,1,1]})");
  const RunResult r = run("analyze " + map);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["classification"]["operator_norm"], 2.0);
  EXPECT_EQ(doc["oracle"]["seed"], 42);
}

TEST_F(CliTest, SeedFlagAndEnvironmentAgree) {
  const std::string map = write("map.json", R"({"kind":"finite","images":[2,2,3,1,5]})");
  const RunResult flag = run("--seed 9 analyze " + map);
  const RunResult env = run("analyze " + map, "GENSHIFT_SEED=9");
  ASSERT_EQ(flag.exit_code, 0);
  EXPECT_EQ(flag.out, env.out);
  EXPECT_EQ(Json::parse(flag.out)["oracle"]["seed"], 9);
  EXPECT_EQ(run("analyze " + map, "GENSHIFT_SEED=abc").exit_code, 2);
}

TEST_F(CliTest, ApplyOutputMatchesLibrary) {
  const std::string map_text = R"({"kind":"symbolic","name":"block","param":3})";
  const std::string vec_text = R"([{"i":1,"re":0.5,"im":-1.25},{"i":4,"re":3.0}])";
  const RunResult r =
      run("apply " + write("map.json", map_text) + " " + write("vec.json", vec_text));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const IndexMap m = map_from_json_text(map_text);
  const SparseVector expected = apply_in_l2(m, vector_from_json_text(vec_text, m.domain()));
  EXPECT_EQ(vector_from_json_text(r.out, m.domain()), expected);
  EXPECT_EQ(expected.support_size(), 6u);
}

TEST_F(CliTest, ApplyNotInL2ExitsFour) {
  const RunResult r = run("apply " +
                          write("map.json", R"({"kind":"symbolic","name":"odd_collapse"})") +
                          " " + write("vec.json", R"([{"i":1,"re":1.0}])"));
  EXPECT_EQ(r.exit_code, 4);
  EXPECT_EQ(Json::parse(r.out)["not_in_l2"]["index"], 1);
  EXPECT_THAT(r.err, HasSubstr("infinite"));
}

TEST_F(CliTest, ParseErrorsExitTwo) {
  EXPECT_EQ(run("analyze " + write("bad.json", "{oops")).exit_code, 2);
  const RunResult c = run("analyze " + write("bad.json", R"({"kind":"finite","images":[1,9]})"));
  EXPECT_EQ(c.exit_code, 2);
  EXPECT_THAT(c.err, HasSubstr("position 2"));
  EXPECT_EQ(run("analyze " + (dir_ / "missing.json").string()).exit_code, 2);
  EXPECT_EQ(run("frobnicate").exit_code, 2);
  EXPECT_EQ(run("oracle-check --n 3").exit_code, 2);
  EXPECT_EQ(run("oracle-check --n 3 --exhaustive --random 4").exit_code, 2);
}

TEST_F(CliTest, WitnessPreconditionsExitFive) {
  const std::string tri = write("tri.json", R"({"kind":"symbolic","name":"triangular"})");
  const std::string blk = write("blk.json", R"({"kind":"symbolic","name":"block","param":3})");
  EXPECT_EQ(run("witness " + tri + " --kind compact").exit_code, 5);
  EXPECT_EQ(run("witness " + blk + " --kind divergence").exit_code, 5);
  EXPECT_EQ(run("witness " + write("f.json", R"({"kind":"finite","images":[1,2]})") +
                " --kind compact")
                .exit_code,
            5);
}

TEST_F(CliTest, WitnessOutputs) {
  const RunResult d = run("witness " +
                          write("tri.json", R"({"kind":"symbolic","name":"triangular"})") +
                          " --kind divergence --K 4");
  ASSERT_EQ(d.exit_code, 0) << d.err;
  EXPECT_EQ(Json::parse(d.out)["records"].size(), 4u);

  const RunResult c = run("witness " +
                          write("s.json", R"({"kind":"symbolic","name":"successor"})") +
                          " --kind compact --count 5");
  ASSERT_EQ(c.exit_code, 0) << c.err;
  EXPECT_EQ(Json::parse(c.out)["separated"], true);
}

TEST_F(CliTest, OracleCheck) {
  const RunResult e = run("oracle-check --n 4 --exhaustive");
  ASSERT_EQ(e.exit_code, 0) << e.err;
  const Json doc = Json::parse(e.out);
  EXPECT_EQ(doc["maps_checked"], 256);
  EXPECT_EQ(doc["disagreements"], 0);
  const RunResult r = run("--seed 3 oracle-check --n 20 --random 50");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["maps_checked"], 50);
}

}  // namespace
}  // namespace genshift
