// Copyright 2026 The apfrrt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "apfrrt/cli/commands.hpp"
#include "fixtures.hpp"

namespace apfrrt::cli {
namespace {

namespace fs = std::filesystem;
using apfrrt::testing::scenario_path;

constexpr std::string_view kSmall = R"([scenario]
name = small

[environment]
kind = point2d
bounds = 0 0 30 30
start = 3 15
goal = 27 15

[obstacle]
shape = rect
min = 13 5
max = 17 25
permeability = permeable
cost = 20

[planner]
max_iterations = 400
delta = 2

[profile plain]
strategy = none

[profile apf]
strategy = nearest_node_bias

[experiment]
trials = 3
base_seed = 5
checkpoints = 200 400
reference = apf
)";

constexpr std::string_view kSealed = R"([environment]
kind = point2d
bounds = 0 0 30 30
start = 3 15
goal = 27 15

[obstacle]
shape = rect
min = 13 0
max = 17 30
permeability = impermeable

[planner]
max_iterations = 200
delta = 2

[profile plain]
strategy = none
)";

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("apfrrt_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    std::ofstream(dir_ / "small.scn") << kSmall;
    std::ofstream(dir_ / "sealed.scn") << kSealed;
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, PlanWritesDeterministicRecord) {
  PlanOptions o;
  o.scenario = (dir_ / "small.scn").string();
  o.profile = "apf";
  o.seed = 3;
  o.out_dir = (dir_ / "a").string();
  ASSERT_EQ(cmd_plan(o, out_, err_), kSuccess) << err_.str();
  o.out_dir = (dir_ / "b").string();
  ASSERT_EQ(cmd_plan(o, out_, err_), kSuccess);
  const auto a = slurp(dir_ / "a" / "small_apf_seed3.json");
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, slurp(dir_ / "b" / "small_apf_seed3.json"));
  const auto j = nlohmann::json::parse(a);
  EXPECT_EQ(j["seed"], 3);
  EXPECT_TRUE(j["solved"].get<bool>());
  EXPECT_EQ(j["tree_violations"], 0);
  EXPECT_EQ(j["checkpoints"].size(), 2u);
  EXPECT_EQ(j["path"].front(), nlohmann::json::array({3.0, 15.0}));
}

TEST_F(CliTest, PlanRendersRequestedLayers) {
  PlanOptions o;
  o.scenario = (dir_ / "small.scn").string();
  o.profile = "plain";
  o.svg = (dir_ / "plan.svg").string();
  o.layers = "world,path";
  ASSERT_EQ(cmd_plan(o, out_, err_), kSuccess) << err_.str();
  const auto svg = slurp(dir_ / "plan.svg");
  EXPECT_NE(svg.find("id=\"world\""), std::string::npos);
  EXPECT_NE(svg.find("id=\"path\""), std::string::npos);
  EXPECT_EQ(svg.find("id=\"tree\""), std::string::npos);
}

TEST_F(CliTest, UnsolvedPlanExitsTwoWithNullPath) {
  PlanOptions o;
  o.scenario = (dir_ / "sealed.scn").string();
  o.profile = "plain";
  o.out_dir = dir_.string();
  EXPECT_EQ(cmd_plan(o, out_, err_), kNoSolution);
  const auto j = nlohmann::json::parse(slurp(dir_ / "sealed_plain_seed0.json"));
  EXPECT_TRUE(j["path"].is_null());
  EXPECT_FALSE(j["solved"].get<bool>());
  for (const auto& c : j["checkpoints"]) EXPECT_TRUE(c["cost"].is_null());
}

TEST_F(CliTest, ConfigAndIoErrors) {
  std::string bad(kSmall);
  bad.replace(bad.find("delta = 2"), 9, "delta = 2\nneighbor_radius = 3");
  std::ofstream(dir_ / "bad.scn") << bad;
  EXPECT_EQ(cmd_validate_scenario((dir_ / "bad.scn").string(), out_, err_), kConfigError);
  EXPECT_NE(err_.str().find("line "), std::string::npos);
  EXPECT_EQ(cmd_validate_scenario((dir_ / "missing.scn").string(), out_, err_), kIoError);
  EXPECT_EQ(cmd_validate_scenario((dir_ / "small.scn").string(), out_, err_), kSuccess);

  PlanOptions o;
  o.scenario = (dir_ / "small.scn").string();
  o.profile = "ghost";
  EXPECT_EQ(cmd_plan(o, out_, err_), kConfigError);
  o.profile = "plain";
  o.layers = "world,sky";
  EXPECT_EQ(cmd_plan(o, out_, err_), kConfigError);
  o.layers = "world";
  fs::create_directories(dir_ / "blocker");
  o.svg = (dir_ / "blocker").string();
  EXPECT_EQ(cmd_plan(o, out_, err_), kIoError);
}

TEST_F(CliTest, ArgumentErrorsAreConfigErrors) {
  const std::string scn = (dir_ / "small.scn").string();
  std::vector<std::string> args{"apfrrt", "plan", "--scenario", scn};
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  EXPECT_EQ(run(static_cast<int>(argv.size()), argv.data()), kConfigError);
}

TEST_F(CliTest, BenchIsDeterministic) {
  BenchOptions o;
  o.scenario = (dir_ / "small.scn").string();
  o.out_dir = (dir_ / "one").string();
  o.threads = 1;
  ASSERT_EQ(cmd_bench(o, out_, err_), kSuccess) << err_.str();
  o.out_dir = (dir_ / "two").string();
  o.threads = 3;
  ASSERT_EQ(cmd_bench(o, out_, err_), kSuccess);
  for (const char* f : {"table.txt", "table.csv", "ttests.csv", "experiment.json", "runs/apf/trial_0002.json"}) {
    const auto a = slurp(dir_ / "one" / f);
    EXPECT_FALSE(a.empty()) << f;
    EXPECT_EQ(a, slurp(dir_ / "two" / f)) << f;
  }
  const auto meta = nlohmann::json::parse(slurp(dir_ / "one" / "experiment.json"));
  EXPECT_EQ(meta["trials"], 3);
  EXPECT_EQ(meta["reference"], "apf");
}

TEST_F(CliTest, ShippedWallBenchWithTwoTrialsIsQuick) {
  BenchOptions o;
  o.scenario = scenario_path("wall.scn");
  o.out_dir = (dir_ / "wall").string();
  o.trials = 2;
  const auto t0 = std::chrono::steady_clock::now();
  ASSERT_EQ(cmd_bench(o, out_, err_), kSuccess) << err_.str();
  const auto elapsed = std::chrono::steady_clock::now() - t0;
  EXPECT_LT(std::chrono::duration<double>(elapsed).count(), 60.0);
  EXPECT_TRUE(fs::exists(dir_ / "wall" / "runs" / "prrtstar" / "trial_0001.json"));
}

TEST_F(CliTest, RenderWithoutProfileDrawsWorld) {
  RenderOptions o;
  o.scenario = scenario_path("wall.scn");
  o.svg = (dir_ / "world.svg").string();
  o.layers = "world,quiver";
  ASSERT_EQ(cmd_render(o, out_, err_), kSuccess) << err_.str();
  const auto svg = slurp(dir_ / "world.svg");
  EXPECT_NE(svg.find("id=\"quiver\""), std::string::npos);
}

}  // namespace
}  // namespace apfrrt::cli
