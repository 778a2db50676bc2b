// Copyright 2026 The Stairnet Authors
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


#include "cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace stairnet {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int Count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("stairnet_cli_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string Path(const std::string& name) const {
    return (dir_ / name).string();
  }
  fs::path dir_;
};

TEST_F(CliTest, ChainsZExample) {
  Result r = Invoke({"chains", "z", "--j", "2", "--k", "2", "--n", "3"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "2\n{(1,2),(2,3)}\n");
}

TEST_F(CliTest, StairPathHasTwoSegments) {
  Result r = Invoke({"viz", "stairpath", "--a", "0,0", "--b", "1,1", "--out",
                  Path("p.svg")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::string svg = Slurp(Path("p.svg"));
  EXPECT_EQ(Count(svg, "<line"), 2);
  EXPECT_NE(svg.find("<svg"), std::string::npos);
}

TEST_F(CliTest, BenchRefuterCsv) {
  Result r = Invoke({"bench", "refuter", "--d", "2", "--sizes", "64,256",
                  "--trials", "20", "--seed", "7"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string header, row;
  std::getline(lines, header);
  EXPECT_EQ(header, "n,k,T,best_count,vol_lb");
  int rows = 0;
  while (std::getline(lines, row)) {
    EXPECT_EQ(Count(row, ","), 4);
    ++rows;
  }
  EXPECT_EQ(rows, 2);
  EXPECT_EQ(Invoke({"bench", "refuter", "--d", "2", "--sizes", "64,256",
                 "--trials", "20", "--seed", "7", "--jobs", "3"})
                .out,
            r.out);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(Invoke({}).code, kExitUsage);
  EXPECT_EQ(Invoke({"nonsense"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"chains", "z", "--j", "2"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"--help"}).code, kExitOk);
  // Randomized commands insist on a seed.
  EXPECT_EQ(Invoke({"bench", "refuter", "--sizes", "64"}).code, kExitUsage);
  // Precondition: chain thresholds need j >= 1.
  EXPECT_EQ(Invoke({"chains", "ackermann", "--n", "0"}).code, kExitUsage);
  Result guard = Invoke({"chains", "ackermann", "--n", "5"});
  EXPECT_EQ(guard.code, kExitGuard);
  EXPECT_NE(guard.err.find("guard"), std::string::npos);
  EXPECT_EQ(Invoke({"net", "certify", "--in", Path("missing.json"), "--eps",
                 "1/4"})
                .code,
            kExitUsage);
}

TEST_F(CliTest, GuardCapsFromEnvironment) {
  ::setenv("STAIRNET_MAX_STAB_TUPLES", "5", 1);
  Result r = Invoke({"chains", "z", "--j", "2", "--k", "3", "--n", "8"});
  ::unsetenv("STAIRNET_MAX_STAB_TUPLES");
  EXPECT_EQ(r.code, kExitGuard) << r.out;
}

TEST_F(CliTest, GridCacheAndOutput) {
  const std::string cache = Path("cache");
  Result first = Invoke({"grid", "--grid", "2,5", "--cache-dir", cache, "--out",
                      Path("g1.json")});
  ASSERT_EQ(first.code, kExitOk) << first.err;
  EXPECT_TRUE(fs::exists(fs::path(cache) / "grid-d2-m5.json"));
  Result second = Invoke({"grid", "--grid", "2,5", "--cache-dir", cache, "--out",
                       Path("g2.json")});
  EXPECT_EQ(second.out, first.out);
  EXPECT_EQ(Slurp(Path("g1.json")), Slurp(Path("g2.json")));
  EXPECT_EQ(Invoke({"grid", "--grid", "2"}).code, kExitUsage);
}

TEST_F(CliTest, NetPipelineIsReproducible) {
  ASSERT_EQ(Invoke({"net", "hammersley", "--s", "64", "--d", "2", "--out",
                 Path("h.json")})
                .code,
            kExitOk);
  for (const char* name : {"w1.json", "w2.json"}) {
    Result r = Invoke({"net", "refute", "--in", Path("h.json"), "--trials", "50",
                    "--seed", "3", "--out", Path(name)});
    ASSERT_EQ(r.code, kExitOk) << r.err;
  }
  EXPECT_EQ(Slurp(Path("w1.json")), Slurp(Path("w2.json")));
  Result cert = Invoke({"net", "certify", "--in", Path("h.json"), "--eps", "1/2",
                     "--out", Path("c.json")});
  EXPECT_EQ(cert.code, kExitOk) << cert.err;
  Result box = Invoke({"net", "empty-box", "--in", Path("h.json")});
  EXPECT_EQ(box.code, kExitOk) << box.err;
  Result svg = Invoke({"viz", "witness", "--in", Path("h.json"), "--witness",
                    Path("w1.json"), "--out", Path("w.svg")});
  EXPECT_EQ(svg.code, kExitOk) << svg.err;
  EXPECT_GT(Count(Slurp(Path("w.svg")), "<rect"), 1);
}

TEST_F(CliTest, TrianglePipelineIsReproducible) {
  ASSERT_EQ(Invoke({"triangles", "gen", "--m", "9", "--rho", "1/9", "--cache-dir",
                 "", "--out", Path("fam.json")})
                .code,
            kExitOk);
  ASSERT_EQ(Invoke({"triangles", "probes", "--fam", Path("fam.json"), "--count",
                 "25", "--seed", "5", "--out", Path("probes.json")})
                .code,
            kExitOk);
  std::string reports[2];
  for (int i = 0; i < 2; ++i) {
    Result r = Invoke({"triangles", "probe", "--fam", Path("fam.json"),
                    "--points", Path("probes.json"), "--report", "csv",
                    "--jobs", i == 0 ? "1" : "4"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    reports[i] = r.out;
  }
  EXPECT_EQ(reports[0], reports[1]);
  EXPECT_EQ(reports[0].substr(0, reports[0].find('\n')),
            "probe,count,ratio,max_class_count,class_violations");
  EXPECT_EQ(Count(reports[0], "\n"), 26);
  Result json = Invoke({"triangles", "probe", "--fam", Path("fam.json"),
                     "--points", Path("probes.json"), "--report", "json"});
  EXPECT_EQ(json.code, kExitOk);
  EXPECT_NE(json.out.find("\"probes\""), std::string::npos);
}

TEST_F(CliTest, ChainsReports) {
  EXPECT_EQ(Invoke({"chains", "ackermann", "--n", "4"}).out, "65536\n");
  EXPECT_EQ(Invoke({"chains", "alpha", "--x", "65537"}).code, kExitOk);
  EXPECT_EQ(Invoke({"chains", "lemma10", "--x", "100"}).code, kExitOk);
  EXPECT_EQ(Invoke({"chains", "beta", "--d", "4", "--r", "16"}).code, kExitOk);
  EXPECT_EQ(Invoke({"chains", "thresholds", "--j", "3", "--m", "5"}).code,
            kExitOk);
  EXPECT_EQ(Invoke({"triangles", "rho", "--n", "81", "--t", "42660"}).code,
            kExitOk);
}

TEST_F(CliTest, HullAndFanPictures) {
  std::ofstream(Path("pts.json"))
      << R"([["1/4","3/4"],["3/4","1/4"],["1/2","1/2"]])";
  Result hull = Invoke({"viz", "hull", "--in", Path("pts.json"), "--res", "32",
                     "--out", Path("hull.svg")});
  ASSERT_EQ(hull.code, kExitOk) << hull.err;
  Result again = Invoke({"viz", "hull", "--in", Path("pts.json"), "--res", "32"});
  EXPECT_EQ(again.out, Slurp(Path("hull.svg")));
  Result fan = Invoke({"viz", "fan", "--anchor", "3/4,3/4", "--k", "4"});
  EXPECT_EQ(fan.code, kExitOk) << fan.err;
  EXPECT_EQ(Invoke({"viz", "fan", "--anchor", "1/4,3/4", "--k", "4"}).code,
            kExitUsage);
}

}  // namespace
}  // namespace stairnet
