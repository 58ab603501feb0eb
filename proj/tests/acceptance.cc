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

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "keyxtract/eval.h"
#include "keyxtract/tagger.h"
#include "keyxtract/text.h"
#include "properties.h"
#include "testing.h"

namespace keyxtract::testing {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Show(const std::vector<std::string>& v) {
  return "[" + text::Join(v, ", ") + "]";
}

bool Near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

Outcome GoldenStage2() {
  const auto pipeline = MakePipeline(Mode::kStage2);
  const auto start = std::chrono::steady_clock::now();
  const auto got = pipeline.Keywords(kWorkedTweet).Texts();
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  const std::vector<std::string> want = {"made", "payment", "line", "got",
                                         "barred", "not", "connected", "delay"};
  std::ostringstream d;
  d << Show(got) << " in " << text::Format2(ms) << " ms";
  return {got == want && ms < 1000, d.str()};
}

Outcome GoldenStage1() {
  const auto got = MakePipeline(Mode::kStage1).Keywords(kWorkedTweet).Texts();
  const std::vector<std::string> want = {"made", "payment", "line", "got",
                                         "barred", "morning", "line", "got",
                                         "connected", "delay"};
  return {got == want, Show(got)};
}

Outcome IdenticalOutput() {
  const auto got = MakePipeline(Mode::kStage2).Keywords(kTravelPassTweet).Texts();
  const std::vector<std::string> want = {"buy", "touch", "travel", "pass"};
  return {got == want, Show(got)};
}

Outcome F1SpotChecks() {
  struct Row { double p, r, f1; };
  const Row rows[] = {{0.40, 1.00, 0.57}, {0.43, 0.75, 0.55}, {0.71, 1.00, 0.83}};
  bool ok = true;
  std::string d;
  for (const auto& row : rows) {
    const double f1 = EvalScores::F1(row.p, row.r);
    ok &= Near(f1, row.f1, 0.005);
    d += (d.empty() ? "" : " ") + text::Format2(f1);
  }
  return {ok, d};
}

Outcome AverageReconstruction() {
  const std::vector<std::pair<double, double>> rows = {
      {0.40, 1.00}, {0.43, 0.75}, {0.38, 0.60}, {0.71, 1.00}, {0.55, 0.86},
      {0.23, 0.75}, {0.25, 0.40}, {0.25, 0.67}, {1.00, 1.00}, {1.00, 1.00},
      {1.00, 1.00}, {0.30, 1.00}, {0.83, 1.00}, {1.00, 0.71}};
  std::vector<EvalScores> scores;
  for (const auto& [p, r] : rows) scores.push_back(EvalScores::FromPR(p, r));
  const auto avg = Average(scores);
  const bool ok = Near(avg.precision, 0.59, 0.01) && Near(avg.recall, 0.84, 0.01) &&
                  Near(avg.f1, 0.66, 0.01);
  return {ok, "P " + text::Format2(avg.precision) + " R " +
                  text::Format2(avg.recall) + " F1 " + text::Format2(avg.f1)};
}

Outcome TuringChecks() {
  struct Row { int x, y, z; double t; };
  const Row rows[] = {{0, 11, 3, 21.43}, {4, 7, 3, 50.00}, {4, 3, 7, 78.57},
                      {5, 5, 4, 64.29}, {0, 4, 10, 71.43}};
  bool ok = true;
  std::string d;
  for (const auto& row : rows) {
    const auto t = TuringTally::From(row.x, row.y, row.z);
    ok &= Near(t.t, row.t, 0.01);
    d += text::Format2(t.t) + " ";
  }
  const std::vector<double> printed = {21.43, 71.43, 85.71, 50.00, 78.57, 64.29};
  const auto v = PassVerdict(printed);
  ok &= v.passed == 5 && v.failed == 1 && Near(v.success_rate, 83.33, 0.005);
  d += "verdict " + std::to_string(v.passed) + "/" + std::to_string(v.failed) +
       " " + text::Format2(v.success_rate) + "%";
  return {ok, d};
}

Outcome PropertySuite() {
  constexpr int kCases = 1000;
  bool ok = true;
  int total = 0;
  std::string d;
  for (const auto& check : AllPropertyChecks()) {
    const auto r = check(kCases);
    total += r.cases;
    if (r.violations > 0 || r.cases < kCases) {
      ok = false;
      d += r.name + ": " + std::to_string(r.violations) + " violations (" +
           r.first_violation + "); ";
    }
  }
  if (ok) d = std::to_string(total) + " cases, 0 violations";
  return {ok, d};
}

Outcome TaggerAccuracy() {
  const auto gold = ImportTaggedFile(TestDataDir() / "heldout_tagged.tsv");
  std::vector<TaggedTweet> predicted;
  size_t tokens = 0;
  for (const auto& tweet : gold.tweets) {
    std::vector<Token> surfaces;
    for (const auto& t : tweet.tokens) {
      surfaces.push_back(Token::Make(t.token.surface, t.token.position));
    }
    tokens += surfaces.size();
    predicted.push_back(Tag(surfaces, BundledResources()->lexicon));
  }
  const double acc = TokenAccuracy(predicted, gold.tweets);
  return {acc >= 0.85, text::Format2(acc * 100) + "% over " +
                           std::to_string(tokens) + " tokens"};
}

}  // namespace
}  // namespace keyxtract::testing

int main() {
  using namespace keyxtract::testing;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"golden stage2 extraction", GoldenStage2},
      {"golden stage1 extraction", GoldenStage1},
      {"identical-output tweet", IdenticalOutput},
      {"F1 formula spot checks", F1SpotChecks},
      {"average row reconstruction", AverageReconstruction},
      {"Turing formula and verdict", TuringChecks},
      {"property suite", PropertySuite},
      {"baseline tagger accuracy", TaggerAccuracy},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s  %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(),
                o.detail.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
