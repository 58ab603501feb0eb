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

#include "properties.h"

namespace keyxtract::testing {
namespace {

constexpr int kCases = 1000;

void ExpectClean(const PropertyResult& r) {
  EXPECT_EQ(r.cases, kCases);
  EXPECT_EQ(r.violations, 0) << r.name << ": " << r.first_violation;
}

TEST(PropertyTest, RejectListWordsNeverSurvive) {
  ExpectClean(CheckRejectExclusion(kCases));
}
TEST(PropertyTest, Stage2DropsTimeIndicators) {
  ExpectClean(CheckTimeIndicatorExclusion(kCases));
}
TEST(PropertyTest, Stage2KeepsNegation) {
  ExpectClean(CheckNegationRetention(kCases));
}
TEST(PropertyTest, Stage2HasNoDuplicatePairs) {
  ExpectClean(CheckNoDuplicatePairs(kCases));
}
TEST(PropertyTest, DedupeKeepsFirstOccurrenceOrder) {
  ExpectClean(CheckDedupeOrder(kCases));
}
TEST(PropertyTest, TallyConservation) {
  ExpectClean(CheckTallyConservation(kCases));
}
TEST(PropertyTest, SessionTallyCountsEveryPair) {
  ExpectClean(CheckSessionTally(kCases));
}
TEST(PropertyTest, F1BoundsAndSymmetry) {
  ExpectClean(CheckF1BoundsAndSymmetry(kCases));
}
TEST(PropertyTest, TokenizingSurfacesIsStable) {
  ExpectClean(CheckTokenizerIdempotence(kCases));
}
TEST(PropertyTest, LemmaIsIdempotent) {
  ExpectClean(CheckLemmaIdempotence(kCases));
}
TEST(PropertyTest, ExtractionIsDeterministic) {
  ExpectClean(CheckDeterminism(kCases));
}

}  // namespace
}  // namespace keyxtract::testing
