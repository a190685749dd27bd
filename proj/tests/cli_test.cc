//
// Copyright 2026 The Staircase Authors
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
//

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "staircase/mechanism_json.h"
#include "staircase/privacy.h"
#include "test_util.h"

namespace staircase {
namespace {

using ::testing::HasSubstr;
using ::testing::StartsWith;

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun Cli(const std::string& args) {
  const std::string cmd = std::string(STAIRCASE_CLI_PATH) + " " + args + " 2>&1";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() /
          ("staircase_cli_test_" + name))
      .string();
}

TEST(CliTest, MechEmitsRandomizedResponse) {
  CliRun r = Cli("mech rr --k 3 --eps 0.6931471805599453");
  ASSERT_EQ(r.code, 0) << r.out;
  auto doc = MechanismFromJson(r.out);
  ASSERT_OK(doc);
  for (int x = 0; x < 3; ++x) EXPECT_NEAR(doc->mechanism(x, x), 0.5, 1e-15);
}

TEST(CliTest, OptRoundTripIsStaircase) {
  const std::string path = TempPath("opt.json");
  CliRun r = Cli("opt --utility tv --eps 1 --p0 0.5,0.3,0.2 --p1 0.2,0.3,0.5 "
              "--out " + path);
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_THAT(r.out, StartsWith("0.138"));
  auto doc = ReadMechanismFile(path);
  ASSERT_OK(doc);
  EXPECT_TRUE(IsStaircase(doc->mechanism, 1.0, 1e-7));
  CliRun check = Cli("check --in " + path + " --p0 0.5,0.3,0.2 --p1 0.2,0.3,0.5");
  EXPECT_EQ(check.code, 0) << check.out;
  EXPECT_THAT(check.out, HasSubstr("is_staircase=true"));
  EXPECT_THAT(check.out, HasSubstr("bound pinsker"));
}

TEST(CliTest, ExitCodes) {
  const std::string bad = TempPath("bad.json");
  std::ofstream(bad) << "{\"k\": 2,\n \"l\": ]";
  CliRun parse = Cli("check --in " + bad);
  EXPECT_EQ(parse.code, 1);
  EXPECT_THAT(parse.out, HasSubstr("line 2"));
  EXPECT_EQ(Cli("check --in /nonexistent/file.json").code, 2);
  EXPECT_EQ(Cli("mech rr --k 3 --eps 1 --out /nonexistent/dir/x.json").code, 2);
  EXPECT_EQ(Cli("mech rr --k 1 --eps 1").code, 1);
  EXPECT_EQ(Cli("bogus").code, 1);
  // A mechanism that is not private at its claimed level fails validation.
  const std::string leaky = TempPath("leaky.json");
  std::ofstream(leaky) << R"({"k": 2, "l": 2, "rows": [[1, 0], [0, 1]],
                             "eps_claimed": 1.0, "delta_claimed": null})";
  EXPECT_EQ(Cli("check --in " + leaky).code, 1);
}

TEST(CliTest, RegionCsv) {
  CliRun r = Cli("region --eps 1.0986122886681098 --delta 0");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out, "p_md,p_fa\n0,1\n0.25,0.25\n1,0\n");
  const std::string quat = TempPath("quat.json");
  ASSERT_EQ(Cli("mech quaternary --eps 1 --delta 0.05 --out " + quat).code, 0);
  CliRun q = Cli("region --in " + quat);
  CliRun ref = Cli("region --eps 1 --delta 0.05");
  EXPECT_EQ(q.out, ref.out);
}

TEST(CliTest, SweepFlagsAndConfig) {
  const std::string a = TempPath("a.csv");
  const std::string b = TempPath("b.csv");
  const std::string cfg = TempPath("cfg.json");
  CliRun flags = Cli("sweep --k 4 --instances 3 --eps-grid 0.5,2 --utility mi "
                  "--threads 2 --out " + a);
  ASSERT_EQ(flags.code, 0) << flags.out;
  EXPECT_THAT(flags.out, HasSubstr("min_mixed_ratio"));
  std::ofstream(cfg) << R"({"k": 4, "num_instances": 3, "eps_grid": [0.5, 2],
                            "utility": "mi", "threads": 1, "out_path": ")"
                     << b << "\"}";
  ASSERT_EQ(Cli("sweep --config " + cfg).code, 0);
  std::stringstream sa, sb;
  sa << std::ifstream(a).rdbuf();
  sb << std::ifstream(b).rdbuf();
  EXPECT_EQ(sa.str(), sb.str());
  EXPECT_THAT(sa.str(), StartsWith("instance_id,eps,mechanism,"));
  EXPECT_EQ(Cli("sweep --instances 0").code, 1);
}

TEST(CliTest, Exponent) {
  CliRun r = Cli("exponent --p0 0.8,0.1,0.1 --p1 0.1,0.1,0.8 --eps 2 --n 2000 "
              "--trials 50");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_THAT(r.out, HasSubstr("estimate="));
  EXPECT_THAT(r.out, HasSubstr("kl=0.617"));
}

}  // namespace
}  // namespace staircase
