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

#include "keyxtract/eval.h"

#include <algorithm>
#include <iterator>
#include <set>

#include "keyxtract/error.h"
#include "keyxtract/text.h"

namespace keyxtract {
namespace {

std::set<std::string> Fold(std::span<const std::string> words) {
  std::set<std::string> out;
  for (const auto& w : words) out.insert(text::FoldCase(text::Trim(w)));
  return out;
}

}  // namespace

double EvalScores::F1(double p, double r) {
  return p + r > 0 ? 2 * p * r / (p + r) : 0.0;
}

EvalScores EvalScores::FromPR(double p, double r) {
  EvalScores s;
  s.precision = p;
  s.recall = r;
  s.f1 = F1(p, r);
  return s;
}

EvalScores Score(std::span<const std::string> machine,
                 std::span<const std::string> human) {
  const auto m = Fold(machine);
  const auto h = Fold(human);
  EvalScores s;
  s.machine_count = static_cast<int>(m.size());
  s.human_count = static_cast<int>(h.size());
  std::vector<std::string> common;
  std::set_intersection(m.begin(), m.end(), h.begin(), h.end(),
                        std::back_inserter(common));
  s.true_positives = static_cast<int>(common.size());
  if (m.empty() && h.empty()) {
    s.precision = s.recall = s.f1 = 1.0;
    return s;
  }
  s.precision = m.empty() ? 0.0 : double(s.true_positives) / m.size();
  s.recall = h.empty() ? 0.0 : double(s.true_positives) / h.size();
  s.f1 = EvalScores::F1(s.precision, s.recall);
  return s;
}

EvalScores Score(const KeywordList& machine,
                 std::span<const std::string> human) {
  const auto texts = machine.Texts();
  return Score(texts, human);
}

AverageScores Average(std::span<const EvalScores> scores) {
  if (scores.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no scores to average");
  }
  AverageScores a;
  for (const auto& s : scores) {
    a.precision += s.precision;
    a.recall += s.recall;
    a.f1 += s.f1;
  }
  a.count = static_cast<int>(scores.size());
  a.precision /= a.count;
  a.recall /= a.count;
  a.f1 /= a.count;
  return a;
}

TuringTally TuringTally::From(int x, int y, int z) {
  if (x < 0 || y < 0 || z < 0 || x + y + z == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "tally needs non-negative counts and at least one pair");
  }
  TuringTally t;
  t.x = x;
  t.y = y;
  t.z = z;
  t.n = x + y + z;
  t.t = text::RoundHalfUp(100.0 * (x + z) / t.n);
  return t;
}

bool TuringTally::passed() const { return t >= kTuringPassThreshold; }

Verdict PassVerdict(std::span<const double> t_values) {
  if (t_values.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no test cases");
  }
  Verdict v;
  for (double t : t_values) {
    // Values are already rounded to 2 decimals.
    if (t + 1e-9 >= kTuringPassThreshold) {
      ++v.passed;
    } else {
      ++v.failed;
    }
  }
  v.success_rate =
      text::RoundHalfUp(100.0 * v.passed / static_cast<double>(t_values.size()));
  return v;
}

Verdict PassVerdict(std::span<const TuringTally> tallies) {
  std::vector<double> t;
  t.reserve(tallies.size());
  for (const auto& tally : tallies) t.push_back(tally.t);
  return PassVerdict(t);
}

bool SameKeywordSet(std::span<const std::string> a,
                    std::span<const std::string> b) {
  return Fold(a) == Fold(b);
}

}  // namespace keyxtract
