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

#include "keyxtract/error.h"
#include "keyxtract/serialize.h"
#include "testing.h"

namespace keyxtract {
namespace {

ErrorCode CodeOf(std::string_view json) {
  try {
    ParseDataset(json);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << json;
  return ErrorCode::kInvalidArgument;
}

TEST(ExtractionJsonTest, KeyOrderAndFields) {
  const auto ex = testing::MakePipeline(Mode::kStage2).Extract(testing::kTravelPassTweet);
  const std::string json = ExtractionToJson(ex);
  EXPECT_EQ(json.find('\n'), std::string::npos);
  EXPECT_EQ(json.rfind("{\"tweet\":", 0), 0u);
  EXPECT_LT(json.find("\"mode\""), json.find("\"keywords\""));
  const auto parsed = nlohmann::json::parse(json);
  EXPECT_EQ(parsed["mode"], "stage2");
  ASSERT_EQ(parsed["keywords"].size(), 4u);
  EXPECT_EQ(parsed["keywords"][0]["text"], "buy");
  EXPECT_EQ(parsed["keywords"][0]["tag"], "VB");
  EXPECT_EQ(parsed["keywords"][0]["source"], "selected");
  EXPECT_FALSE(parsed.contains("trace"));
}

TEST(ExtractionJsonTest, TraceIncluded) {
  const auto ex = testing::MakePipeline(Mode::kStage2, true).Extract(testing::kWorkedTweet);
  const auto parsed = nlohmann::json::parse(ExtractionToJson(ex));
  ASSERT_TRUE(parsed.contains("trace"));
  EXPECT_EQ(parsed["trace"][0]["stage"], "tagging");
  EXPECT_EQ(parsed["trace"][0]["tokens"][0]["action"], "kept");
  const auto& kw = parsed["keywords"];
  EXPECT_EQ(kw[5]["source"], "negation_reinserted");
}

TEST(ExtractionJsonTest, InvalidUtf8DoesNotThrow) {
  const std::string bad = "line \xff\xfe down";
  const auto ex = testing::MakePipeline(Mode::kStage2).Extract(bad);
  EXPECT_NO_THROW(nlohmann::json::parse(ExtractionToJson(ex)));
}

TEST(DatasetTest, ParsesRows) {
  const auto rows = ParseDataset(R"([
    {"tweet": "a", "human": ["x"]},
    {"tweet": "b", "human": ["y"], "human2": ["z"], "machine": ["y"]}
  ])");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_FALSE(rows[0].human2.has_value());
  EXPECT_FALSE(rows[0].machine.has_value());
  EXPECT_EQ(rows[1].human2->at(0), "z");
  EXPECT_EQ(rows[1].machine->at(0), "y");
}

TEST(DatasetTest, Malformed) {
  EXPECT_EQ(CodeOf("not json"), ErrorCode::kMalformedDataset);
  EXPECT_EQ(CodeOf("{}"), ErrorCode::kMalformedDataset);
  EXPECT_EQ(CodeOf("[]"), ErrorCode::kMalformedDataset);
  EXPECT_EQ(CodeOf(R"([{"human": []}])"), ErrorCode::kMalformedDataset);
  EXPECT_EQ(CodeOf(R"([{"tweet": "a", "human": "x"}])"),
            ErrorCode::kMalformedDataset);
}

TEST(DatasetTest, LoadFileAndMissingFile) {
  const auto path =
      testing::WriteTemp("one.json", R"([{"tweet": "a", "human": ["x"]}])");
  EXPECT_EQ(LoadDataset(path).size(), 1u);
  try {
    LoadDataset("/nonexistent/none.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

TEST(DatasetTest, BundledDemo) {
  const auto rows = LoadDataset(DefaultDataDir() / "datasets" / "demo.json");
  EXPECT_EQ(rows.size(), 14u);
  for (const auto& r : rows) EXPECT_FALSE(r.human.empty());
}

}  // namespace
}  // namespace keyxtract
