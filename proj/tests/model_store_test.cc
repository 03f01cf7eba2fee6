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

#include "rrlangid/model_store.h"

#include <random>
#include <sstream>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "rrlangid/classifier.h"
#include "test_util.h"

namespace rrlangid {
namespace {

using ::rrlangid::testing::MakeProfile;
using ::rrlangid::testing::ReadFile;
using ::rrlangid::testing::TempDir;
using ::rrlangid::testing::WriteFile;
using ::testing::HasSubstr;

std::string ErrorOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const DataError& e) {
    return e.what();
  }
  return "";
}

TEST(LoadModelTest, ReadsWordAndCharFiles) {
  TempDir dir;
  WriteFile(dir / "en_words", "the\t3\nof\t2\nand\t1\n");
  WriteFile(dir / "en_chars", "e\t2\nt\t1\nh\t1\n");
  const ClassifierModel m = LoadModel(dir.path());
  ASSERT_EQ(m.languages(), std::vector<std::string>{"en"});
  EXPECT_EQ(m.profile(0).words.Rank("of"), 2u);
  EXPECT_DOUBLE_EQ(m.profile(0).chars.Frequency(U'e'), 0.5);
}

TEST(LoadModelTest, IgnoresUnrelatedFiles) {
  TempDir dir;
  WriteFile(dir / "en_words", "the\t3\n");
  WriteFile(dir / "en_chars", "e\t2\n");
  WriteFile(dir / "overrides.tsv", "en\t+\tyes\t1\n");
  WriteFile(dir / "README", "hello");
  EXPECT_EQ(LoadModel(dir.path()).num_languages(), 1u);
}

TEST(LoadModelTest, MissingCharFileNamesLanguage) {
  TempDir dir;
  WriteFile(dir / "en_words", "the\t3\n");
  WriteFile(dir / "en_chars", "e\t2\n");
  WriteFile(dir / "de_words", "der\t3\n");
  EXPECT_THAT(ErrorOf([&] { LoadModel(dir.path()); }), HasSubstr("'de'"));
}

TEST(LoadModelTest, MissingWordFileNamesLanguage) {
  TempDir dir;
  WriteFile(dir / "de_chars", "e\t2\n");
  EXPECT_THAT(ErrorOf([&] { LoadModel(dir.path()); }), HasSubstr("de_words"));
}

TEST(LoadModelTest, EmptyDirectoryGivesEmptyModelThatAbstains) {
  TempDir dir;
  const ClassifierModel m = LoadModel(dir.path());
  EXPECT_EQ(m.num_languages(), 0u);
  EXPECT_TRUE(Classify("hello world", m).abstained());
  EXPECT_TRUE(Classify("", m).abstained());
}

TEST(LoadModelTest, MalformedLinesReportFileAndLine) {
  TempDir dir;
  WriteFile(dir / "en_chars", "e\t2\n");
  WriteFile(dir / "en_words", "the\t3\nof 2\n");
  EXPECT_THAT(ErrorOf([&] { LoadModel(dir.path()); }), HasSubstr("en_words:2"));
  WriteFile(dir / "en_words", "the\t3\nof\t0\n");
  EXPECT_THAT(ErrorOf([&] { LoadModel(dir.path()); }), HasSubstr("en_words:2"));
  WriteFile(dir / "en_words", "the\tmany\n");
  EXPECT_THAT(ErrorOf([&] { LoadModel(dir.path()); }), HasSubstr("en_words:1"));
  WriteFile(dir / "en_words", "the\t3\n");
  WriteFile(dir / "en_chars", "e\t2\nab\t1\n");
  EXPECT_THAT(ErrorOf([&] { LoadModel(dir.path()); }), HasSubstr("en_chars:2"));
}

TEST(LoadModelTest, RuleViolationsAreNotRepaired) {
  TempDir dir;
  WriteFile(dir / "en_chars", "e\t2\n");
  for (const char* bad :
       {"The\t3\n", "r2d2\t3\n", "http\t3\n", "the\t3\nthe\t2\n"}) {
    WriteFile(dir / "en_words", bad);
    EXPECT_THROW(LoadModel(dir.path()), DataError) << bad;
  }
}

TEST(LoadModelTest, EmptyCharFileIsAnError) {
  TempDir dir;
  WriteFile(dir / "en_words", "the\t3\n");
  WriteFile(dir / "en_chars", "");
  EXPECT_THAT(ErrorOf([&] { LoadModel(dir.path()); }), HasSubstr("'en'"));
}

TEST(LoadModelTest, BadLanguageCodeInFileName) {
  TempDir dir;
  WriteFile(dir / "english_words", "the\t3\n");
  EXPECT_THROW(LoadModel(dir.path()), DataError);
}

TEST(LoadModelTest, TruncatesToCapacity) {
  TempDir dir;
  WriteFile(dir / "en_words", "a\t4\nb\t3\nc\t2\nd\t1\n");
  WriteFile(dir / "en_chars", "a\t1\n");
  EXPECT_EQ(LoadModel(dir.path(), 2).profile(0).words.size(), 2u);
}

TEST(LoadModelTest, MissingDirectory) {
  EXPECT_THROW(LoadModel("/nonexistent/rrlangid/model"), DataError);
}

TEST(SaveModelTest, SortsCharFileByCountThenCodePoint) {
  const ClassifierModel m({MakeProfile(
      "en", {"the"}, {{U'b', 2}, {U'a', 2}, {U'é', 5}, {U'c', 1}})});
  TempDir dir;
  SaveModel(m, dir.path());
  EXPECT_EQ(ReadFile(dir / "en_chars"), "é\t5\na\t2\nb\t2\nc\t1\n");
  EXPECT_EQ(ReadFile(dir / "en_words"), "the\t1\n");
}

TEST(SaveModelTest, RemovesStaleLanguages) {
  TempDir dir;
  WriteFile(dir / "zz_words", "x\t1\n");
  WriteFile(dir / "zz_chars", "x\t1\n");
  SaveModel(ClassifierModel({MakeProfile("en", {"a"}, {{U'a', 1}})}),
            dir.path());
  EXPECT_EQ(LoadModel(dir.path()).languages(), std::vector<std::string>{"en"});
}

TEST(SaveModelTest, RoundTripsRandomModels) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<LanguageProfile> profiles;
    const int n_lang = 1 + trial % 4;
    for (int l = 0; l < n_lang; ++l) {
      const std::string code = {static_cast<char>('a' + l), 'x'};
      std::vector<RankedWord> entries;
      for (int i = 0; i < static_cast<int>(rng() % 30); ++i) {
        entries.push_back(
            {"w" + std::string(1 + i, 'q'), 1000 - static_cast<uint64_t>(i)});
      }
      std::map<char32_t, uint64_t> chars;
      for (int i = 0; i < 1 + static_cast<int>(rng() % 20); ++i) {
        chars[U'a' + rng() % 2000] = 1 + rng() % 500;
      }
      profiles.push_back(
          {RankTable(code, entries), CharFreqTable(code, chars)});
    }
    const ClassifierModel m(profiles);
    TempDir dir;
    SaveModel(m, dir.path());
    const ClassifierModel back = LoadModel(dir.path());
    ASSERT_EQ(back.languages(), m.languages());
    for (size_t i = 0; i < m.num_languages(); ++i) {
      EXPECT_EQ(back.profile(i).words, m.profile(i).words);
      for (const auto& [c, n] : m.profile(i).chars.counts()) {
        EXPECT_NEAR(back.profile(i).chars.Frequency(c),
                    m.profile(i).chars.Frequency(c), 1e-12);
      }
      EXPECT_EQ(back.profile(i).chars, m.profile(i).chars);
    }
  }
}

TEST(OverridesTest, ParsesAndFormats) {
  std::istringstream in(
      "# comment\n"
      "en\t+\tplease\t11\n"
      "\n"
      "en\t-\tof\n"
      "pt\t+\tobrigado\t1\n");
  const OverridesSet o = ParseOverrides(in, "overrides.tsv");
  ASSERT_EQ(o.ops.size(), 3u);
  EXPECT_EQ(o.ops[0],
            (OverrideOp{OverrideOp::Kind::kInsert, "en", "please", 11}));
  EXPECT_EQ(o.ops[1], (OverrideOp{OverrideOp::Kind::kDelete, "en", "of", 0}));
  EXPECT_EQ(FormatOverrides(o),
            "en\t+\tplease\t11\nen\t-\tof\npt\t+\tobrigado\t1\n");
  std::istringstream again(FormatOverrides(o));
  EXPECT_EQ(ParseOverrides(again, "x"), o);
}

TEST(OverridesTest, RejectsMalformedLines) {
  for (const char* bad :
       {"en\t+\tplease\n", "en\t+\tplease\t0\n", "en\t+\tplease\tx\n",
        "en\t*\tplease\n", "english\t-\tof\n", "en\t-\tOf\n", "en\t-\tof\t3\n",
        "en\tplease\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(ParseOverrides(in, "o.tsv"), DataError) << bad;
  }
}

TEST(OverridesTest, ErrorsCarryLineNumbers) {
  std::istringstream in("en\t+\ta\t1\nen\t+\tb\n");
  EXPECT_THAT(ErrorOf([&] { ParseOverrides(in, "o.tsv"); }),
              HasSubstr("o.tsv:2"));
}

TEST(ApplyOverridesTest, AppliesInOrderAndLeavesInputAlone) {
  const ClassifierModel m(
      {MakeProfile("en", {"a", "the", "of", "in"}, {{U'a', 1}}),
       MakeProfile("fr", {"le"}, {{U'a', 1}})});
  OverridesSet o;
  o.Insert("en", "the", 1);
  o.Delete("en", "of");
  o.Insert("fr", "bonjour", 1);
  const ClassifierModel out = ApplyOverrides(m, o);
  const RankTable& en = out.profile(0).words;
  EXPECT_EQ(en.Rank("the"), 1u);
  EXPECT_EQ(en.Rank("a"), 2u);
  EXPECT_EQ(en.Rank("in"), 3u);
  EXPECT_FALSE(en.Contains("of"));
  EXPECT_EQ(out.profile(1).words.Rank("bonjour"), 1u);
  EXPECT_EQ(m.profile(0).words.Rank("of"), 3u);
}

TEST(ApplyOverridesTest, UnknownLanguageOrBadRank) {
  const ClassifierModel m({MakeProfile("en", {"a"}, {{U'a', 1}})});
  OverridesSet o;
  o.Insert("de", "der", 1);
  EXPECT_THROW(ApplyOverrides(m, o), DataError);
  OverridesSet zero;
  zero.Insert("en", "b", 0);
  EXPECT_THROW(ApplyOverrides(m, zero), DataError);
}

}  // namespace
}  // namespace rrlangid
