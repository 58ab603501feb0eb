/*
 * Copyright 2026 The KeyXtract Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.h"
#include "testing.h"

namespace keyxtract {
namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult RunCli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::Run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> KeywordTexts(const std::string& json_line) {
  std::vector<std::string> out;
  const auto parsed = nlohmann::json::parse(json_line);
  for (const auto& k : parsed["keywords"]) {
    out.push_back(k["text"]);
  }
  return out;
}

std::vector<std::string> Lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(CliExtractTest, WorkedTweetBothModes) {
  const auto s2 = RunCli({"extract"}, std::string(testing::kWorkedTweet) + "\n");
  ASSERT_EQ(s2.code, cli::kExitOk) << s2.err;
  EXPECT_EQ(KeywordTexts(s2.out).size(), 8u);
  const auto s1 =
      RunCli({"--mode", "stage1", "extract"}, std::string(testing::kWorkedTweet) + "\n");
  ASSERT_EQ(s1.code, cli::kExitOk) << s1.err;
  EXPECT_EQ(KeywordTexts(s1.out),
            (std::vector<std::string>{"made", "payment", "line", "got", "barred",
                                      "morning", "line", "got", "connected",
                                      "delay"}));
}

TEST(CliExtractTest, EmptyStdin) {
  const auto r = RunCli({"extract"}, "");
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_TRUE(r.out.empty());
}

TEST(CliExtractTest, ParallelKeepsInputOrder) {
  std::string input;
  for (int i = 0; i < 40; ++i) {
    input += (i % 2 ? testing::kTravelPassTweet : testing::kWorkedTweet);
    input += "\n";
  }
  const auto r = RunCli({"extract", "-j", "4"}, input);
  ASSERT_EQ(r.code, cli::kExitOk);
  const auto lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 40u);
  for (int i = 0; i < 40; ++i) {
    EXPECT_EQ(KeywordTexts(lines[i]).size(), i % 2 ? 4u : 8u) << i;
  }
}

TEST(CliExtractTest, TableFormatAndTrace) {
  const auto table = RunCli({"--format", "table", "extract"},
                            std::string(testing::kTravelPassTweet) + "\n");
  ASSERT_EQ(table.code, cli::kExitOk);
  const auto lines = Lines(table.out);
  ASSERT_GE(lines.size(), 5u);
  EXPECT_EQ(lines[0].rfind("# ", 0), 0u);
  EXPECT_EQ(lines[1], "buy\tVB\tselected");
  const auto traced = RunCli({"extract", "--trace"}, "line hasn't worked\n");
  EXPECT_TRUE(nlohmann::json::parse(traced.out).contains("trace"));
}

TEST(CliExtractTest, InputFile) {
  const auto path = testing::WriteTemp("tweets.txt", "buy a touch travel pass\n\n");
  const auto r = RunCli({"extract", path.string()});
  ASSERT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(Lines(r.out).size(), 1u);
}

TEST(CliTokenizeTest, Contraction) {
  const auto r = RunCli({"tokenize"}, "hasn't\n");
  EXPECT_EQ(r.out, "has\nn't\n");
}

TEST(CliTagTest, OneTokenPerLine) {
  const auto r = RunCli({"tag"}, "buy a pass\n");
  ASSERT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "buy\tVB\na\tDT\npass\tNN\n");
}

TEST(CliCorpusTest, BundledRejectList) {
  const auto r = RunCli(
      {"corpus", "check", (DefaultDataDir() / "reject.txt").string(), "--kind", "reject"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "30 terms, 0 warnings\n");
}

TEST(CliCorpusTest, DuplicatesAndEmpty) {
  const auto dup = testing::WriteTemp("dup.txt", "a\nA\nb\n");
  const auto r = RunCli({"corpus", "check", dup.string()});
  EXPECT_EQ(r.out, "2 terms, 1 warnings\n");
  EXPECT_FALSE(r.err.empty());
  const auto empty = testing::WriteTemp("empty.txt", "# nothing\n");
  EXPECT_EQ(RunCli({"corpus", "check", empty.string()}).code, cli::kExitResource);
}

TEST(CliEvalTest, IdenticalListsScoreOne) {
  const auto path = testing::WriteTemp(
      "same.json",
      R"([{"tweet":"t","human":["a","b"],"machine":["b","a"]},
          {"tweet":"u","human":["c"],"machine":["C"]}])");
  const auto r = RunCli({"--format", "json", "eval", path.string()});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto avg = nlohmann::json::parse(r.out)["sets"][0]["average"];
  EXPECT_DOUBLE_EQ(avg["p"].get<double>(), 1.0);
  EXPECT_DOUBLE_EQ(avg["r"].get<double>(), 1.0);
  EXPECT_DOUBLE_EQ(avg["f1"].get<double>(), 1.0);
}

TEST(CliEvalTest, HandComputedDataset) {
  // Rows: P .5 R 1 F1 2/3; P 1 R .25 F1 .4; P 0 R 0 F1 0.
  // Means: P 1.5/3, R 1.25/3 = .4167, F1 1.0667/3 = .3556.
  const auto path = testing::WriteTemp(
      "three.json",
      R"([{"tweet":"t1","human":["a","b"],"machine":["a","b","c","d"]},
          {"tweet":"t2","human":["x","y","z","w"],"machine":["x"]},
          {"tweet":"t3","human":["r"],"machine":["p","q"]}])");
  const auto r = RunCli({"eval", path.string()});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[1], "1         0.50  1.00  0.67");
  EXPECT_EQ(lines[4], "Average   0.50  0.42  0.36");
  const auto j = RunCli({"--format", "json", "eval", path.string()});
  const auto avg = nlohmann::json::parse(j.out)["sets"][0]["average"];
  EXPECT_DOUBLE_EQ(avg["r"].get<double>(), 0.42);
  EXPECT_DOUBLE_EQ(avg["f1"].get<double>(), 0.36);
}

TEST(CliEvalTest, SecondAnnotator) {
  const auto path = testing::WriteTemp(
      "two.json", R"([{"tweet":"t","human":["a"],"human2":["a","b"],"machine":["a"]}])");
  const auto r = RunCli({"eval", path.string()});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("== human2 =="), std::string::npos);
  EXPECT_NE(r.out.find("Cross"), std::string::npos);
}

TEST(CliEvalTest, PipelineComputesMissingMachineLists) {
  const auto r = RunCli({"eval", (DefaultDataDir() / "datasets" / "demo.json").string()});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(Lines(r.out).size(), 16u);
}

TEST(CliErrorTest, ExitCodes) {
  const auto empty = testing::WriteTemp("none.json", "[]");
  const auto r = RunCli({"eval", empty.string()});
  EXPECT_EQ(r.code, cli::kExitResource);
  EXPECT_EQ(r.err.rfind("keyxtract: ", 0), 0u);
  EXPECT_EQ(RunCli({"eval", "/nonexistent.json"}).code, cli::kExitResource);
  EXPECT_EQ(RunCli({"--bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(RunCli({"extract", "--nope"}).code, cli::kExitUsage);
  EXPECT_EQ(RunCli({"--mode", "stage9", "extract"}).code, cli::kExitUsage);
  EXPECT_EQ(RunCli({}).code, cli::kExitUsage);
  EXPECT_EQ(RunCli({"--help"}).code, cli::kExitOk);
  EXPECT_EQ(RunCli({"--lexicon", "/nonexistent.tsv", "extract"}, "x\n").code,
            cli::kExitResource);
}

}  // namespace
}  // namespace keyxtract
