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

#include "keyxtract/corpora.h"
#include "keyxtract/error.h"
#include "testing.h"

namespace keyxtract {
namespace {

const CorpusStore& Store() { return BundledResources()->store; }

TEST(NormalizeTermTest, FoldsAndCollapses) {
  EXPECT_EQ(NormalizeTerm("  Top \t  UP "), "top up");
  EXPECT_EQ(NormalizeTerm("Hello"), "hello");
  EXPECT_EQ(NormalizeTerm("   "), "");
}

TEST(ParseCorpusTest, DuplicatesCollapseWithWarning) {
  const std::vector<std::string> lines = {"# reject", "hello", "Hello", "",
                                          "hi"};
  const auto load = ParseCorpus(lines, CorpusKind::kReject, "r");
  EXPECT_EQ(load.corpus.size(), 2u);
  EXPECT_EQ(load.warnings.size(), 1u);
  EXPECT_EQ(load.corpus.kind(), CorpusKind::kReject);
  EXPECT_EQ(load.corpus.name(), "r");
}

TEST(ParseCorpusTest, EmptyCorpusIsAnError) {
  const std::vector<std::string> lines = {"# only a comment", ""};
  try {
    ParseCorpus(lines, CorpusKind::kDsk, "d");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyCorpus);
  }
}

TEST(LoadCorpusTest, NamesCorpusAfterFile) {
  const auto path = testing::WriteTemp("telecom.txt", "reload\ntop  up\n");
  const auto load = LoadCorpus(path, CorpusKind::kDsk);
  EXPECT_EQ(load.corpus.name(), "telecom");
  EXPECT_TRUE(load.corpus.Contains("top up"));
  EXPECT_EQ(load.corpus.max_phrase_tokens(), 2);
}

TEST(LoadCorpusTest, MissingFile) {
  try {
    LoadCorpus("/nonexistent/keyxtract.txt", CorpusKind::kDsk);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

TEST(BundledCorporaTest, RejectListSeed) {
  const auto& reject = Store().reject();
  EXPECT_EQ(reject.size(), 30u);
  for (const char* w : {"hello", "hi", "dear", "please", "thanks"}) {
    EXPECT_TRUE(Store().IsNoise(w)) << w;
  }
  EXPECT_FALSE(Store().IsNoise("payment"));
}

TEST(BundledCorporaTest, DomainList) {
  EXPECT_TRUE(Store().dsk().Contains("reload"));
  EXPECT_TRUE(Store().dsk().Contains("megarun"));
  EXPECT_TRUE(Store().dsk().Contains("top up"));
  EXPECT_GE(Store().dsk().max_phrase_tokens(), 2);
  EXPECT_LE(Store().dsk().max_phrase_tokens(), 3);
}

TEST(BundledCorporaTest, ListsAreDisjoint) {
  for (const auto& term : Store().dsk().terms()) {
    EXPECT_FALSE(Store().reject().Contains(term)) << term;
  }
}

TEST(AuxiliariesTest, ClosedList) {
  for (const char* w : {"be", "have", "do", "will", "would", "can", "could",
                        "shall", "should", "may", "might", "must"}) {
    EXPECT_TRUE(Store().IsAuxiliary(w)) << w;
  }
  EXPECT_EQ(Auxiliaries().size(), 12u);
  EXPECT_FALSE(Store().IsAuxiliary("get"));
}

TEST(CorpusStoreTest, ConflictNamesSharedTerms) {
  Corpus dsk("d", CorpusKind::kDsk, {"reload", "data"});
  Corpus reject("r", CorpusKind::kReject, {"data", "hello"});
  try {
    CorpusStore(dsk, reject);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCorpusConflict);
    EXPECT_NE(std::string(e.what()).find("data"), std::string::npos);
  }
}

TEST(CorpusStoreTest, DefaultIsEmpty) {
  const CorpusStore store;
  EXPECT_TRUE(store.dsk().empty());
  EXPECT_FALSE(store.IsNoise("hello"));
  EXPECT_TRUE(store.IsAuxiliary("be"));
}

}  // namespace
}  // namespace keyxtract
