// Copyright 2026 The kuniform Authors
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

#include "kuf/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace kuf::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("kuf_cli_" + std::string(::testing::UnitTest::GetInstance()
                                         ->current_test_info()
                                         ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name) << text;
  }

  fs::path dir_;
};

TEST(Fnv1aTest, KnownVectors) {
  EXPECT_EQ(fnv1a64(""), "fnv1a64:cbf29ce484222325");
  EXPECT_EQ(fnv1a64("a"), "fnv1a64:af63dc4c8601ec8c");
}

TEST_F(CliTest, ConstructThenVerify) {
  const Result c = call({"construct", "kuniform", "--k", "2", "--d", "3", "--N",
                         "4", "-o", path("s.state")});
  ASSERT_EQ(c.code, kExitPass) << c.err;
  const json rc = c.report();
  EXPECT_EQ(rc["verdict"], "pass");
  EXPECT_EQ(rc["details"]["existence"]["status"], "exists_constructive");

  const Result v = call({"verify", "state", "--k", "2", path("s.state")});
  EXPECT_EQ(v.code, kExitPass);
  const json rv = v.report();
  EXPECT_EQ(rv["command"], "verify state");
  EXPECT_EQ(rv["details"]["subsets_checked"], 6);
  EXPECT_TRUE(rv["inputs_digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
  EXPECT_TRUE(rv["versions"].contains("facts"));
}

TEST_F(CliTest, ProductStateFails) {
  write("product.state", "state 3 2 1 exact\n0 0 0 1 0\n");
  const Result v = call({"verify", "state", "--k", "1", path("product.state")});
  EXPECT_EQ(v.code, kExitFail);
  const json r = v.report();
  EXPECT_EQ(r["verdict"], "fail");
  EXPECT_EQ(r["details"]["failures"][0]["subset"], json::array({0}));
}

TEST_F(CliTest, ImpossibleUniformity) {
  write("ghz.state", "state 2 2 2 exact\n0 0 1 0\n1 1 1 0\n");
  const Result v = call({"verify", "state", "--k", "2", path("ghz.state")});
  EXPECT_EQ(v.code, kExitFail);
  EXPECT_EQ(v.report()["verdict"], "impossible");
}

TEST_F(CliTest, TableRow) {
  const Result t = call({"table", "--k", "4", "--d", "2", "--N", "8..11"});
  ASSERT_EQ(t.code, kExitPass) << t.err;
  const json cells = t.report()["details"]["cells"];
  ASSERT_EQ(cells.size(), 4u);
  const std::vector<std::string> expected{"×", "×", "×", "?"};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(cells[i]["symbol"], expected[i]);
    EXPECT_EQ(cells[i]["d"], 2);
  }
  EXPECT_TRUE(cells[0].contains("citation"));

  const Result text = call({"table", "--k", "5", "--layout", "published",
                            "--format", "text"});
  EXPECT_EQ(text.code, kExitPass);
  EXPECT_NE(text.out.find("6,10,14"), std::string::npos);
}

TEST_F(CliTest, ReportsAreDeterministicAcrossThreadCounts) {
  ASSERT_EQ(call({"construct", "kuniform", "--k", "2", "--d", "5", "--N", "6",
                  "-o", path("s.state")})
                .code,
            kExitPass);
  const Result one = call({"--threads", "1", "verify", "state", "--k", "2",
                           path("s.state")});
  const Result four = call({"--threads", "4", "verify", "state", "--k", "2",
                            path("s.state")});
  EXPECT_EQ(one.out, four.out);
  EXPECT_EQ(one.out, call({"verify", "state", "--k", "2", path("s.state")}).out);
}

TEST_F(CliTest, UsageAndParseErrors) {
  EXPECT_EQ(call({}).code, kExitUsage);
  EXPECT_EQ(call({"verify", "state", "--k", "2", path("missing.state")}).code,
            kExitUsage);
  EXPECT_EQ(call({"table", "--k", "4"}).code, kExitUsage);
  EXPECT_EQ(call({"table", "--k", "4", "--d", "x..y", "--N", "8"}).code, kExitUsage);
  write("bad.state", "state 2 2 2 exact\n0 0 1\n");
  const Result bad = call({"verify", "state", "--k", "1", path("bad.state")});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos) << bad.err;
  EXPECT_EQ(call({"--help"}).code, kExitPass);
}

TEST_F(CliTest, BadCapsEnvironment) {
  ::setenv("KUF_CAPS", "codewords=banana", 1);
  const Result r = call({"mask", "feasible", "--N", "4", "--d", "2"});
  ::unsetenv("KUF_CAPS");
  EXPECT_EQ(r.code, kExitUsage);
}

TEST_F(CliTest, RefusedConstruction) {
  const Result r = call({"construct", "kuniform", "--k", "4", "--d", "6", "--N",
                         "9", "-o", path("x.state")});
  EXPECT_EQ(r.code, kExitFail);
  EXPECT_EQ(r.report()["verdict"], "refused");
  EXPECT_FALSE(fs::exists(path("x.state")));
}

TEST_F(CliTest, MaskingPipeline) {
  ASSERT_EQ(call({"construct", "kuniform", "--k", "2", "--d", "3", "--N", "4",
                  "-o", path("s.state")})
                .code,
            kExitPass);
  const Result b = call({"mask", "build", "--state", path("s.state"), "--split",
                         "0", "--k", "1", "-o", path("bundle")});
  ASSERT_EQ(b.code, kExitPass) << b.err;
  EXPECT_TRUE(fs::exists(path("bundle/manifest.json")));

  const Result v = call({"mask", "verify", "--k", "1", "--samples", "8",
                         path("bundle")});
  EXPECT_EQ(v.code, kExitPass);
  EXPECT_EQ(v.report()["details"]["sampling"]["pass"], true);
  EXPECT_EQ(call({"mask", "verify", "--k", "2", path("bundle")}).code, kExitFail);

  const Result q = call({"qecc", "verify", "--delta", "2", "--bundle", path("bundle")});
  EXPECT_EQ(q.code, kExitPass) << q.err;
  EXPECT_EQ(q.report()["details"]["K"], 3);

  const Result f = call({"mask", "feasible", "--N", "6", "--d", "5"});
  EXPECT_EQ(f.code, kExitFail);
  EXPECT_EQ(f.report()["verdict"], "infeasible");
  EXPECT_EQ(call({"mask", "feasible", "--N", "5", "--d", "2"}).code, kExitPass);
}

TEST_F(CliTest, CodesArraysAndComposition) {
  ASSERT_EQ(call({"construct", "mds", "--d", "5", "--t", "2", "-o",
                  path("c.code")})
                .code,
            kExitPass);
  const Result vc = call({"verify", "code", path("c.code")});
  EXPECT_EQ(vc.code, kExitPass);
  EXPECT_EQ(vc.report()["details"]["code"], "[6,2,5]_5");
  EXPECT_EQ(call({"verify", "code", "--expect-self-dual", path("c.code")}).code,
            kExitFail);

  ASSERT_EQ(call({"construct", "oa", "--code", path("c.code"), "--trim", "4",
                  "--k", "2", "-o", path("a.oa")})
                .code,
            kExitPass);
  const Result va = call({"verify", "oa", "--k", "2", path("a.oa")});
  EXPECT_EQ(va.code, kExitPass);
  EXPECT_EQ(va.report()["details"]["irredundant_for_k"], true);
  EXPECT_EQ(va.report()["details"]["min_distance"], 3);
  EXPECT_EQ(call({"verify", "oa", "--k", "3", path("a.oa")}).code, kExitFail);

  ASSERT_EQ(call({"construct", "ghz", "--d", "2", "--N", "3", "-o", path("g2.state")}).code,
            kExitPass);
  ASSERT_EQ(call({"construct", "ghz", "--d", "3", "--N", "3", "-o", path("g3.state")}).code,
            kExitPass);
  const Result comp = call({"compose", path("g2.state"), path("g3.state"), "--k",
                            "1", "-o", path("g6.state")});
  EXPECT_EQ(comp.code, kExitPass) << comp.err;
  EXPECT_EQ(comp.report()["details"]["d"], 6);
  EXPECT_EQ(call({"verify", "state", "--k", "1", path("g6.state")}).code, kExitPass);
}

}  // namespace
}  // namespace kuf::cli
