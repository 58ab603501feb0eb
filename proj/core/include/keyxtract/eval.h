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

// Keyword-set scoring against human annotations and Turing-test tallies.

#ifndef KEYXTRACT_EVAL_H_
#define KEYXTRACT_EVAL_H_

#include <span>
#include <string>
#include <vector>

#include "keyxtract/model.h"

namespace keyxtract {

struct EvalScores {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  int true_positives = 0;
  int machine_count = 0;
  int human_count = 0;

  // Harmonic mean of p and r; 0 when both are 0.
  static double F1(double p, double r);
  // Scores carrying only P, R and F1, for reconstructing published tables.
  static EvalScores FromPR(double p, double r);
};

// Compares keyword texts as case-folded sets; tags are ignored and
// duplicates count once. Both sides empty scores 1/1/1.
EvalScores Score(std::span<const std::string> machine,
                 std::span<const std::string> human);
EvalScores Score(const KeywordList& machine,
                 std::span<const std::string> human);

struct AverageScores {
  double precision = 0;
  double recall = 0;
  double f1 = 0;  // mean of per-item F1, not F1 of the means
  int count = 0;
};

// Throws Error(kEmptyInput) on an empty sequence.
AverageScores Average(std::span<const EvalScores> scores);

struct TuringTally {
  int x = 0;  // machine and human answers identical
  int y = 0;  // supervisor picked the machine list
  int z = 0;  // supervisor was fooled
  int n = 0;
  double t = 0;  // ((x + z) / n) * 100, rounded to 2 decimals

  // Throws Error(kInvalidArgument) unless x, y, z >= 0 and x + y + z == n > 0.
  static TuringTally From(int x, int y, int z);
  bool passed() const;
};

inline constexpr double kTuringPassThreshold = 50.0;

struct Verdict {
  int passed = 0;
  int failed = 0;
  double success_rate = 0;  // passed / total * 100, rounded to 2 decimals
};

// A test case passes at T >= 50.00. Both throw Error(kEmptyInput) on empty
// input.
Verdict PassVerdict(std::span<const TuringTally> tallies);
Verdict PassVerdict(std::span<const double> t_values);

// True when the two lists hold the same case-folded texts.
bool SameKeywordSet(std::span<const std::string> a,
                    std::span<const std::string> b);

}  // namespace keyxtract

#endif  // KEYXTRACT_EVAL_H_
