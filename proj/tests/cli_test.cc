// Copyright 2026 The coremix Authors
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

#include "cli.h"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "coremix/edge_list.h"
#include "coremix/multigraph.h"
#include "gtest/gtest.h"

namespace coremix {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "coremix");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("coremix_cli_" + std::to_string(::testing::UnitTest::GetInstance()
                                                ->random_seed()) +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
  }

  json read_json(const std::string& name) const {
    std::ifstream in(path(name));
    return json::parse(in);
  }

  fs::path dir_;
};

TEST_F(CliTest, HelpAndUsageErrors) {
  EXPECT_EQ(run({"--help"}).code, kExitOk);
  EXPECT_EQ(run({"sample", "--help"}).code, kExitOk);
  EXPECT_EQ(run({"frobnicate"}).code, kExitConfigError);
  EXPECT_EQ(run({"sample"}).code, kExitConfigError);
  EXPECT_EQ(run({"sample", "--model", "gnm", "--n", "3", "--m", "9"}).code,
            kExitConfigError);
}

TEST_F(CliTest, ExperimentConfigErrors) {
  write("bad.json", "{\"schema\": 1, \"name\": \"tails\", \"sizes\": [100], \"wat\": 1}");
  const CliRun bad = run({"experiment", "--name", "tails", "--config", path("bad.json")});
  EXPECT_EQ(bad.code, kExitConfigError);
  EXPECT_FALSE(bad.err.empty());
  write("broken.json", "{not json");
  EXPECT_EQ(run({"experiment", "--name", "tails", "--config", path("broken.json")}).code,
            kExitConfigError);
  write("other.json", "{\"schema\": 1, \"name\": \"diameter\", \"sizes\": [100]}");
  EXPECT_EQ(run({"experiment", "--name", "tails", "--config", path("other.json")}).code,
            kExitConfigError);
}

TEST_F(CliTest, SampleIsDeterministic) {
  const auto args = std::vector<std::string>{"sample", "--model", "cnm", "--n", "50",
                                             "--m", "70", "--seed", "5"};
  const CliRun a = run(args);
  const CliRun b = run(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  std::istringstream in(a.out);
  const Multigraph g = read_edge_list(in);
  EXPECT_EQ(g.vertex_count(), 50u);
  EXPECT_EQ(g.edge_count(), 70u);
}

TEST_F(CliTest, CertifyCheckExitCodes) {
  write("c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
  write("b.txt", "0 1 2 3\n");
  EXPECT_EQ(run({"certify", "--in", path("c4.txt"), "--B", path("b.txt"), "--alpha",
                 "0.4", "--check"})
                .code,
            kExitOk);
  const CliRun fail = run({"certify", "--in", path("c4.txt"), "--B", path("b.txt"),
                        "--alpha", "0.6", "--check", "--out", path("cert.json")});
  EXPECT_EQ(fail.code, kExitCheckFailed);
  EXPECT_FALSE(read_json("cert.json").at("pass").get<bool>());
}

TEST_F(CliTest, SmokePipeline) {
  const auto start = std::chrono::steady_clock::now();
  ASSERT_EQ(run({"sample", "--model", "gnm", "--n", "1000", "--c", "2", "--seed", "3",
                 "--out", path("g.txt")})
                .code,
            kExitOk);
  const CliRun dec = run({"decompose", "--in", path("g.txt"), "--out", path("dec.json")});
  ASSERT_EQ(dec.code, kExitOk) << dec.err;
  const json report = read_json("dec.json");
  EXPECT_GT(report.at("giant_vertices").get<int>(), 500);

  const CliRun strip = run({"strip", "--in", path("g.txt"), "--N", "8", "--trace",
                         path("trace.jsonl"), "--out", path("r.txt")});
  ASSERT_EQ(strip.code, kExitOk) << strip.err;
  EXPECT_TRUE(fs::exists(path("r.txt")));

  const CliRun strong = run({"strong-core", "--in", path("g.txt"), "--giant", "--N", "8",
                          "--alpha", "0.01", "--out", path("strong.json")});
  ASSERT_EQ(strong.code, kExitOk) << strong.err;
  EXPECT_TRUE(read_json("strong.json").contains("condition1"));

  const CliRun mix = run({"sample", "--model", "gnm", "--n", "60", "--m", "120", "--seed",
                       "2", "--out", path("small.txt")});
  ASSERT_EQ(mix.code, kExitOk);
  const CliRun walk = run({"mix", "--in", path("small.txt"), "--mode", "simulate",
                        "--steps", "100", "--out", path("walk.json")});
  ASSERT_EQ(walk.code, kExitOk) << walk.err;

  write("exp.json",
        "{\"schema\": 1, \"name\": \"giant_sizes\", \"sizes\": [1000], \"trials\": 2,"
        " \"thresholds\": {\"giant_tolerance\": 1e-12}}");
  const CliRun exp = run({"experiment", "--name", "giant_sizes", "--config",
                       path("exp.json"), "--output", path("rec")});
  ASSERT_EQ(exp.code, kExitOk) << exp.err;
  EXPECT_TRUE(fs::exists(path("rec.json")));
  EXPECT_TRUE(fs::exists(path("rec.csv")));
  EXPECT_EQ(run({"experiment", "--name", "giant_sizes", "--config", path("exp.json"),
                 "--check"})
                .code,
            kExitCheckFailed);
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(60));
}

}  // namespace
}  // namespace coremix
