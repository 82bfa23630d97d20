// Copyright 2026 The DGSP Authors.
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

#include "dgsp/cli.h"

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "dgsp/graph.h"
#include "dgsp/io.h"

namespace dgsp {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("dgsp_cli_" + std::string(::testing::UnitTest::GetInstance()
                                          ->current_test_info()
                                          ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int Run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return RunCli(args, out_, err_);
  }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(CliTest, GenerateUndirectedCycle) {
  ASSERT_EQ(Run({"generate", "ucycle", "--n", "50", "--out", Path("g")}), kExitOk);
  EXPECT_EQ(LoadEdgeList(Path("g/graph.csv")), UndirectedCycle(50));
  EXPECT_EQ(LoadSignal(Path("g/signal.csv")).size(), 50);
  EXPECT_TRUE(fs::exists(Path("g/manifest.json")));
}

TEST_F(CliTest, GeneratePerturbed) {
  ASSERT_EQ(Run({"generate", "perturbed", "--n", "50", "--k", "3", "--seed", "7",
                 "--out", Path("g")}),
            kExitOk);
  EXPECT_EQ(LoadEdgeList(Path("g/graph.csv")), PerturbedCycle(50, 3, 7));
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Run({"generate", "dcycle", "--n", "2", "--out", Path("g")}), kExitUsage);
  EXPECT_EQ(Run({"generate", "square"}), kExitUsage);
  EXPECT_EQ(Run({}), kExitUsage);
  EXPECT_EQ(Run({"--help"}), kExitOk);
}

TEST_F(CliTest, TransformUndirectedCycleIsDiagonal) {
  ASSERT_EQ(Run({"generate", "ucycle", "--n", "50", "--out", Path("g")}), kExitOk);
  ASSERT_EQ(Run({"transform", "--graph", Path("g/graph.csv"), "--signal",
                 Path("g/signal.csv"), "--out", Path("t")}),
            kExitOk);
  const Json j = Json::parse(ReadTextFile(Path("t/spectrum.json")));
  EXPECT_EQ(j["n"], 50);
  const double fraction = std::stod(out_.str().substr(out_.str().find(':') + 1));
  EXPECT_NEAR(fraction, 1.0, 1e-10);
  EXPECT_TRUE(fs::exists(Path("t/heatmap.svg")));
}

TEST_F(CliTest, TransformDirectedCycleSpreads) {
  ASSERT_EQ(Run({"generate", "perturbed", "--n", "50", "--k", "5", "--out", Path("g")}),
            kExitOk);
  ASSERT_EQ(Run({"transform", "--graph", Path("g/graph.csv"), "--signal",
                 Path("g/signal.csv"), "--out", Path("t")}),
            kExitOk);
  const double fraction = std::stod(out_.str().substr(out_.str().find(':') + 1));
  EXPECT_LT(fraction, 1.0);
}

TEST_F(CliTest, TransformZeroSignalReportsNa) {
  ASSERT_EQ(Run({"generate", "dcycle", "--n", "6", "--out", Path("g")}), kExitOk);
  SaveSignal(Vector::Zero(6), Path("zero.csv"));
  ASSERT_EQ(Run({"transform", "--graph", Path("g/graph.csv"), "--signal",
                 Path("zero.csv"), "--out", Path("t")}),
            kExitOk);
  EXPECT_NE(out_.str().find("n/a"), std::string::npos);
}

TEST_F(CliTest, TransformSignalLengthMismatch) {
  ASSERT_EQ(Run({"generate", "dcycle", "--n", "6", "--out", Path("g")}), kExitOk);
  SaveSignal(Vector::Zero(5), Path("short.csv"));
  EXPECT_EQ(Run({"transform", "--graph", Path("g/graph.csv"), "--signal",
                 Path("short.csv"), "--out", Path("t")}),
            kExitDataMismatch);
}

TEST_F(CliTest, BadEdgeListIsDataError) {
  WriteTextFile(Path("bad.csv"), "src,dst,weight,dir\n0,0,1,d\n");
  SaveSignal(Vector::Zero(2), Path("s.csv"));
  EXPECT_EQ(Run({"transform", "--graph", Path("bad.csv"), "--signal", Path("s.csv"),
                 "--out", Path("t")}),
            kExitDataMismatch);
}

TEST_F(CliTest, DenoiseZeroNoise) {
  ASSERT_EQ(Run({"denoise", "--sigma", "0", "--trials", "3", "--out", Path("d")}),
            kExitOk);
  const std::string summary = ReadTextFile(Path("d/summary.csv"));
  EXPECT_NE(summary.find("\n0,0,0,0,0,0,0,"), std::string::npos) << summary;
}

TEST_F(CliTest, DenoiseRejectsNegativeSigma) {
  EXPECT_EQ(Run({"denoise", "--sigma", "-1", "--out", Path("d")}), kExitUsage);
}

TEST_F(CliTest, PerturbSingularLaplacianViolatesAssumption) {
  ASSERT_EQ(Run({"generate", "perturbed", "--n", "50", "--k", "1", "--out", Path("g")}),
            kExitOk);
  EXPECT_EQ(Run({"perturb", "--graph", Path("g/graph.csv"), "--out", Path("p")}),
            kExitAssumption);
}

TEST_F(CliTest, PerturbDerogatoryViolatesAssumption) {
  ASSERT_EQ(Run({"generate", "ucycle", "--n", "12", "--out", Path("g")}), kExitOk);
  EXPECT_EQ(Run({"perturb", "--graph", Path("g/graph.csv"), "--shift", "adj", "--out",
                 Path("p")}),
            kExitAssumption);
}

TEST_F(CliTest, PerturbEmptyScalesIsUsageError) {
  ASSERT_EQ(Run({"generate", "dcycle", "--n", "6", "--out", Path("g")}), kExitOk);
  EXPECT_EQ(Run({"perturb", "--graph", Path("g/graph.csv"), "--scales", "", "--out",
                 Path("p")}),
            kExitUsage);
}

TEST_F(CliTest, PerturbWritesReport) {
  // Invertible, non-derogatory 6-node operator.
  WriteTextFile(Path("g.csv"),
                "src,dst,weight,dir\n0,1,1,d\n1,2,2,d\n2,3,3,d\n3,4,4,d\n4,5,5,d\n"
                "5,0,6,d\n0,2,0.5,d\n3,1,0.25,d\n");
  ASSERT_EQ(Run({"perturb", "--graph", Path("g.csv"), "--shift", "adj", "--out",
                 Path("p")}),
            kExitOk)
      << err_.str();
  const Json j = Json::parse(ReadTextFile(Path("p/report.json")));
  EXPECT_GE(j["transform"]["slope"].get<double>(), 0.9);
  EXPECT_TRUE(fs::exists(Path("p/report.csv")));
}

TEST_F(CliTest, SpreadOutputs) {
  ASSERT_EQ(Run({"spread", "--seeds", "2", "--ks", "0,5", "--out", Path("s")}), kExitOk);
  EXPECT_TRUE(fs::exists(Path("s/spread.csv")));
  EXPECT_TRUE(fs::exists(Path("s/summary.json")));
  EXPECT_TRUE(fs::exists(Path("s/heatmap_k0.svg")));
  EXPECT_TRUE(fs::exists(Path("s/heatmap_k5.svg")));
}

}  // namespace
}  // namespace dgsp
