// Copyright 2026 The qmatops Authors
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
#include <string>
#include <vector>

#include "bridge.hpp"
#include "cli.hpp"
#include "qmatops/appendix.hpp"
#include "qmatops/io.hpp"

using namespace qmatops;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "qmatops");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qmatops_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
    worked_ = (dir_ / "worked.json").string();
    io::write_matrix_file(worked_, appendix::worked_matrix());
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
  std::string worked_;
};

}  // namespace

TEST_F(Cli, RowSwapOnWorkedMatrix) {
  const Result r = run({"row-swap", "--input", worked_, "--k", "3", "--l", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_NEAR(doc["probability"].get<double>(), 1.0 / 24.0, 1e-12);
  EXPECT_NEAR(doc["predicted_probability"].get<double>(), 1.0 / 24.0, 1e-15);
  // The restored matrix is the unnormalized input with rows 1 and 3 exchanged.
  const ComplexMatrix back = io::matrix_from_json(doc["scaled_matrix"]);
  const ref::Mat want = ref::row_swapped(bridge::to_ref(appendix::worked_matrix()), 3, 1);
  EXPECT_LE(bridge::max_diff(back, want), 1e-12);
}

TEST_F(Cli, TransposeAndMatrixOut) {
  const std::string out = path("t.json");
  const Result r = run({"transpose", "--input", worked_, "--matrix-out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["probability"], 1.0);
  const ComplexMatrix t = io::read_matrix_file(out);
  EXPECT_LE(bridge::max_diff(t, ref::transposed(bridge::to_ref(appendix::worked_matrix()))), 1e-12);
}

TEST_F(Cli, Deterministic) {
  const std::vector<std::string> args{"row-add", "--input", worked_, "--k", "0", "--l", "2",
                                      "--shots", "500", "--seed", "9"};
  const Result a = run(args);
  const Result b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json::parse(a.out)["sampling"]["shots"], 500);
}

TEST_F(Cli, ErrorsAndExitCodes) {
  const Result same = run({"row-add", "--input", worked_, "--k", "1", "--l", "1"});
  EXPECT_EQ(same.code, 1);
  EXPECT_NE(same.err.find("error:"), std::string::npos);

  std::ofstream(path("bad.json")) << R"({"rows": 2, "cols": 2, "data": [1, 2, 3]})";
  const Result bad = run({"trace", "--input", path("bad.json")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("data"), std::string::npos);

  EXPECT_EQ(run({"trace", "--input", worked_, "--k", "1"}).code, 2);
  EXPECT_EQ(run({"trace", "--input", path("missing.json")}).code, 2);
  EXPECT_EQ(run({"row-swap", "--input", worked_, "--k", "1"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"scaling", "--algorithm", "determinant", "--widths", "1", "2"}).code, 2);
}

TEST_F(Cli, TraceZeroProbabilityIsNotAnError) {
  std::ofstream(path("z.json")) << R"({"rows": 2, "cols": 2, "data": [0, 1, 1, 0]})";
  const Result r = run({"trace", "--input", path("z.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["probability"], 0.0);
}

TEST_F(Cli, ScalingAndVerify) {
  const Result s = run({"scaling", "--algorithm", "trace", "--widths", "1", "2", "3"});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_TRUE(json::parse(s.out)["all_passed"].get<bool>());

  const Result v = run({"verify", "--seed", "7"});
  EXPECT_EQ(v.code, 0) << v.out;
  EXPECT_EQ(v.out.find("FAIL"), std::string::npos);
}

TEST_F(Cli, WorkedExampleAndHelp) {
  const Result a = run({"appendix1"});
  ASSERT_EQ(a.code, 0) << a.err;
  const json doc = json::parse(a.out);
  EXPECT_LE(doc["listed_terms"]["max_deviation"].get<double>(), 1e-10);
  EXPECT_GT(doc["listed_terms"]["terms"].size(), 100u);

  const Result h = run({"--help"});
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("row-swap"), std::string::npos);
}
