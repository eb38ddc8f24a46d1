/*
   Copyright 2026 The intdiff Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  std::string cmd = std::string(INTDIFF_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

nlohmann::json golden(const std::string& name) {
  std::ifstream in(std::string(INTDIFF_GOLDEN_DIR) + "/" + name);
  EXPECT_TRUE(in.good()) << name;
  return nlohmann::json::parse(in);
}

void expect_golden(const std::string& args, const std::string& name) {
  CliRun r = run(args);
  ASSERT_EQ(r.code, 0) << args;
  EXPECT_EQ(nlohmann::json::parse(r.out), golden(name)) << args;
}

}  // namespace

TEST(Cli, NormalFormText) {
  CliRun r = run("norm \"I^2*d^2\"");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(trim(r.out), "1 - e(0,0) - e(1,1)");
}

TEST(Cli, FDegree) {
  EXPECT_EQ(trim(run("fdeg \"d^3\"").out), "-1");
  EXPECT_EQ(trim(run("fdeg \"e(2,0) + e(0,5)\"").out), "5");
}

TEST(Cli, ApplyToPolynomial) {
  CliRun r = run("apply \"d\" \"x^3\"");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(trim(r.out), "3*x^2");
}

TEST(Cli, Golden) {
  expect_golden("--format json norm \"I*d + 1/2*I^2*H\"", "norm_rank1.json");
  expect_golden("--n 2 --format json norm \"e(0,0)1*x2 - 3*d1\"", "norm_rank2.json");
  expect_golden("--format json split \"I^2*H^2 + e(1,3) + d\"", "split.json");
  expect_golden("--format json matrix \"d + e(1,2)\" --size 3", "matrix.json");
  expect_golden("--format json dims --gen \"I,H\" --max 5", "dims.json");
  expect_golden("--format json dims --gen \"e(0,0)\" --max 5", "dims_e00.json");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("norm \"I^\"").code, 1);
  EXPECT_EQ(run("norm \"q\"").code, 1);
  EXPECT_EQ(run("--n 2 norm \"I\"").code, 1);
  EXPECT_EQ(run("--n 2 split \"I1\"").code, 1);
  EXPECT_EQ(run("verify --suite nope").code, 1);
  EXPECT_EQ(run("socle \"0\"").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
}

TEST(Cli, VerifySuite) {
  CliRun r = run("verify --suite kernel --n 2");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(Cli, Deterministic) {
  const std::string args = "--format json --seed 7 verify --suite socle --samples 40";
  CliRun a = run(args);
  CliRun b = run(args);
  ASSERT_EQ(a.code, 0);
  auto ja = nlohmann::json::parse(a.out);
  auto jb = nlohmann::json::parse(b.out);
  for (auto* j : {&ja, &jb})
    for (auto& item : (*j)["results"]) item.erase("seconds");
  EXPECT_EQ(ja, jb);
}

int main(int argc, char** argv) {
  testing::InitGoogleTest(&argc, argv);
  return RUN_ALL_TESTS();
}
