// Copyright 2026 The rrlangid Authors
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

#include <sstream>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "rrlangid/model_store.h"
#include "test_util.h"

namespace rrlangid {
namespace {

using ::rrlangid::testing::ReadFile;
using ::rrlangid::testing::TempDir;
using ::rrlangid::testing::WriteFile;
using ::testing::HasSubstr;
using ::testing::StartsWith;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(const std::vector<std::string>& args,
           const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = RunCli(args, in, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    WriteFile(dir_ / "corpus/en/a.txt",
              "the cat and the dog. the end, and more of the cat.\n");
    WriteFile(dir_ / "corpus/de/a.txt",
              "der Hund und die Katze. der Bär und der Wald.\n");
    model_ = (dir_ / "model").string();
    const CliRun r = Cli(
        {"train", "--corpus", (dir_ / "corpus").string(), "--model", model_});
    ASSERT_EQ(r.code, kExitOk) << r.err;
  }

  TempDir dir_;
  std::string model_;
};

TEST_F(CliTest, TrainWritesFourFilesAndSummary) {
  for (const char* f : {"de_words", "de_chars", "en_words", "en_chars"}) {
    EXPECT_TRUE(std::filesystem::exists(dir_ / "model" / f)) << f;
  }
  EXPECT_THAT(ReadFile(dir_ / "model/en_words"), StartsWith("the\t4\n"));
  const CliRun again = Cli({"train", "--corpus", (dir_ / "corpus").string(),
                            "--model", (dir_ / "model2").string()});
  ASSERT_EQ(again.code, kExitOk);
  EXPECT_THAT(again.out, HasSubstr("en\twords="));
  for (const char* f : {"de_words", "de_chars", "en_words", "en_chars"}) {
    EXPECT_EQ(ReadFile(dir_ / "model" / f), ReadFile(dir_ / "model2" / f));
  }
}

TEST_F(CliTest, TrainEmptyLanguageDirectoryFails) {
  std::filesystem::create_directories(dir_ / "corpus/fr");
  const CliRun r = Cli({"train", "--corpus", (dir_ / "corpus").string(),
                        "--model", (dir_ / "m").string()});
  EXPECT_EQ(r.code, kExitData);
  EXPECT_THAT(r.err, HasSubstr("fr"));
}

TEST_F(CliTest, ClassifyWinnerMode) {
  const CliRun r =
      Cli({"classify", "--model", model_}, "the cat\nder Hund\n1906\n\n");
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "en\nde\n??\n??\n");
}

TEST_F(CliTest, ClassifyScoreAndAllModes) {
  const CliRun score = Cli({"classify", "--model", model_, "--mode", "score"},
                           "the cat\n1906\n");
  ASSERT_EQ(score.code, kExitOk);
  EXPECT_THAT(score.out,
              ::testing::MatchesRegex("en\t[0-9]+\\.[0-9]{6}\n\\?\\?\n"));
  const CliRun all =
      Cli({"classify", "--model", model_, "--mode", "all"}, "the\n");
  ASSERT_EQ(all.code, kExitOk);
  EXPECT_THAT(all.out, StartsWith("en:"));
}

TEST_F(CliTest, ClassifyFromFileWithScoringFlags) {
  WriteFile(dir_ / "in.txt", "und der\n");
  const CliRun r =
      Cli({"classify", "--model", model_, "--input", (dir_ / "in.txt").string(),
           "-P", "0.1", "-D", "5", "--cutoff", "0.5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "de\n");
}

TEST_F(CliTest, Sample) {
  const CliRun r = Cli({"sample", "--target", "4"}, "aa bb cc");
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "aa bb\ncc\n");
}

TEST_F(CliTest, EvaluateWritesBothReports) {
  WriteFile(dir_ / "test/en/a.txt", "the cat and the dog");
  WriteFile(dir_ / "test/de/a.txt", "der Hund und die Katze 1906");
  const std::string report = (dir_ / "report.txt").string();
  const CliRun r =
      Cli({"evaluate", "--model", model_, "--test", (dir_ / "test").string(),
           "--target", "8", "--report", report, "--macro-abstain-class"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(ReadFile(report), r.out);
  EXPECT_THAT(r.out, HasSubstr("abstain"));
  EXPECT_THAT(ReadFile(report + ".tsv"),
              StartsWith("class\tprecision\trecall\tf1\tsupport\n"));
}

TEST_F(CliTest, CurateThenApplyOverrides) {
  WriteFile(dir_ / "texts.txt",
            "the cat yes\nthe dog yes\nthe yes\nder und Hund\n");
  const std::string overrides = (dir_ / "o.tsv").string();
  const CliRun curate =
      Cli({"curate", "--model", model_, "--texts",
           (dir_ / "texts.txt").string(), "--output", overrides});
  ASSERT_EQ(curate.code, kExitOk) << curate.err;
  EXPECT_THAT(curate.out, HasSubstr("en\tyes\t"));
  EXPECT_THAT(ReadFile(overrides), HasSubstr("en\t+\tyes\t"));

  const std::string out_model = (dir_ / "model_o").string();
  const CliRun apply = Cli({"apply-overrides", "--model", model_, "--overrides",
                            overrides, "--output", out_model});
  ASSERT_EQ(apply.code, kExitOk) << apply.err;
  EXPECT_TRUE(LoadModel(out_model).profile(1).words.Contains("yes"));
}

TEST_F(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Cli({"classify"}).code, kExitUsage);
  EXPECT_EQ(Cli({"classify", "--model", model_, "--mode", "best"}).code,
            kExitUsage);
  EXPECT_EQ(Cli({"classify", "--model", model_, "--cutoff", "1.5"}).code,
            kExitUsage);
  EXPECT_EQ(Cli({"sample", "--target", "0"}).code, kExitUsage);
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
}

TEST_F(CliTest, DataErrorsExitTwo) {
  WriteFile(dir_ / "model/en_words", "The\t3\n");
  const CliRun r = Cli({"classify", "--model", model_}, "x\n");
  EXPECT_EQ(r.code, kExitData);
  EXPECT_THAT(r.err, HasSubstr("en_words:1"));
  EXPECT_EQ(Cli({"classify", "--model", (dir_ / "nope").string()}).code,
            kExitData);
}

}  // namespace
}  // namespace rrlangid
