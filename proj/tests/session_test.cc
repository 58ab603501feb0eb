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

#include <thread>

#include "keyxtract/error.h"
#include "keyxtract/session.h"
#include "testing.h"

namespace keyxtract {
namespace {

std::vector<PairInput> Pairs(int n, int identical = 0) {
  std::vector<PairInput> out;
  for (int i = 0; i < n; ++i) {
    PairInput p;
    p.tweet = "tweet " + std::to_string(i);
    p.human = {"line", "w" + std::to_string(i)};
    p.machine = i < identical ? p.human : std::vector<std::string>{"line"};
    out.push_back(std::move(p));
  }
  return out;
}

Side MachineSide(const SessionPair& p) {
  return p.machine_on_left ? Side::kLeft : Side::kRight;
}

Side Other(Side s) { return s == Side::kLeft ? Side::kRight : Side::kLeft; }

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(TuringSessionTest, SameSeedSameSides) {
  TuringSession a("a", "c", Pairs(32), 7);
  TuringSession b("b", "c", Pairs(32), 7);
  TuringSession c("c", "c", Pairs(32), 8);
  int left = 0;
  bool differs = false;
  for (int i = 0; i < 32; ++i) {
    EXPECT_EQ(a.pairs()[i].machine_on_left, b.pairs()[i].machine_on_left);
    if (a.pairs()[i].machine_on_left != c.pairs()[i].machine_on_left) differs = true;
    left += a.pairs()[i].machine_on_left;
  }
  EXPECT_TRUE(differs);
  EXPECT_GT(left, 0);
  EXPECT_LT(left, 32);
}

TEST(TuringSessionTest, ViewPlacesListsBySide) {
  TuringSession s("s", "c", Pairs(4), 11);
  for (int i = 0; i < 4; ++i) {
    const auto view = s.Next();
    ASSERT_TRUE(view.has_value());
    EXPECT_EQ(view->pair_index, i);
    EXPECT_EQ(view->pair_count, 4);
    const auto& p = s.pairs()[i];
    EXPECT_EQ(view->left, p.machine_on_left ? p.input.machine : p.input.human);
    EXPECT_EQ(view->right, p.machine_on_left ? p.input.human : p.input.machine);
    s.Judge(i, Side::kLeft);
  }
  EXPECT_FALSE(s.Next().has_value());
  EXPECT_EQ(s.status(), SessionStatus::kComplete);
}

TEST(TuringSessionTest, TallyFromJudgments) {
  // Two identical pairs, then detect three and miss the rest.
  TuringSession s("s", "Graduates", Pairs(14, 2), 3);
  for (int i = 0; i < 14; ++i) {
    const Side machine = MachineSide(s.pairs()[i]);
    s.Judge(i, (i >= 2 && i < 5) ? machine : Other(machine));
  }
  const auto t = s.Tally();
  EXPECT_EQ(t.x, 2);
  EXPECT_EQ(t.y, 3);
  EXPECT_EQ(t.z, 9);
  EXPECT_EQ(t.n, 14);
  EXPECT_DOUBLE_EQ(t.t, 78.57);  // 11 / 14
  EXPECT_TRUE(t.passed());
}

TEST(TuringSessionTest, Conflicts) {
  TuringSession s("s", "c", Pairs(2), 1);
  EXPECT_EQ(CodeOf([&] { s.Tally(); }), ErrorCode::kSessionOpen);
  EXPECT_EQ(CodeOf([&] { s.Judge(1, Side::kLeft); }), ErrorCode::kJudgmentConflict);
  s.Judge(0, Side::kLeft);
  EXPECT_EQ(CodeOf([&] { s.Judge(0, Side::kRight); }), ErrorCode::kJudgmentConflict);
  s.Judge(1, Side::kRight);
  EXPECT_EQ(CodeOf([&] { s.Judge(2, Side::kLeft); }), ErrorCode::kJudgmentConflict);
  EXPECT_EQ(s.judgments()[0], Side::kLeft);
}

TEST(TuringSessionTest, EmptyDataset) {
  EXPECT_EQ(CodeOf([] { TuringSession("s", "c", {}, 1); }), ErrorCode::kEmptyInput);
}

TEST(SessionStoreTest, UnknownSession) {
  SessionStore store;
  EXPECT_EQ(CodeOf([&] { store.Next("nope"); }), ErrorCode::kUnknownSession);
  EXPECT_EQ(CodeOf([&] { store.Judge("nope", 0, Side::kLeft); }),
            ErrorCode::kUnknownSession);
  EXPECT_EQ(CodeOf([&] { store.Result("nope"); }), ErrorCode::kUnknownSession);
}

TEST(SessionStoreTest, CreateJudgeResult) {
  SessionStore store;
  const auto id = store.Create("Academics", Pairs(3), 5);
  EXPECT_EQ(store.PairCount(id), 3);
  EXPECT_EQ(store.Status(id), SessionStatus::kOpen);
  EXPECT_EQ(store.Judge(id, 0, Side::kLeft), 1);
  EXPECT_EQ(store.Judge(id, 1, Side::kLeft), 2);
  EXPECT_EQ(CodeOf([&] { store.Result(id); }), ErrorCode::kSessionOpen);
  EXPECT_EQ(store.Judge(id, 2, Side::kRight), 3);
  const auto r = store.Result(id);
  EXPECT_EQ(r.criterion, "Academics");
  EXPECT_EQ(r.tally.n, 3);
  EXPECT_EQ(r.outcomes.size(), 3u);
  EXPECT_NE(store.Create("Academics", Pairs(3)), id);
  EXPECT_EQ(store.size(), 2u);
}

TEST(SessionStoreTest, ReloadsFromDisk) {
  const auto dir = testing::TempDir("sessions");
  std::string id;
  {
    SessionStore store(dir);
    id = store.Create("Graduates", Pairs(3), 99);
    store.Judge(id, 0, Side::kRight);
  }
  SessionStore again(dir);
  EXPECT_EQ(again.size(), 1u);
  EXPECT_EQ(again.Status(id), SessionStatus::kOpen);
  const auto view = again.Next(id);
  ASSERT_TRUE(view.has_value());
  EXPECT_EQ(view->pair_index, 1);
  again.Judge(id, 1, Side::kLeft);
  again.Judge(id, 2, Side::kLeft);
  SessionStore third(dir);
  const auto r = third.Result(id);
  EXPECT_EQ(r.judgments,
            (std::vector<Side>{Side::kRight, Side::kLeft, Side::kLeft}));
  TuringSession fresh("x", "c", Pairs(3), 99);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(r.pairs[i].machine_on_left, fresh.pairs()[i].machine_on_left);
  }
}

TEST(SessionStoreTest, ParallelJudgingOneWinner) {
  SessionStore store;
  const auto id = store.Create("c", Pairs(1), 1);
  std::atomic<int> ok{0};
  std::vector<std::thread> threads;
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([&] {
      try {
        store.Judge(id, 0, Side::kLeft);
        ++ok;
      } catch (const Error&) {
      }
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(ok.load(), 1);
}

TEST(NamesTest, RoundTrip) {
  EXPECT_EQ(ParseSide(SideName(Side::kLeft)), Side::kLeft);
  EXPECT_EQ(ParseSide("right"), Side::kRight);
  EXPECT_FALSE(ParseSide("middle").has_value());
  EXPECT_EQ(StatusName(SessionStatus::kComplete), "complete");
  EXPECT_EQ(OutcomeName(PairOutcome::kUndetected), "undetected");
}

}  // namespace
}  // namespace keyxtract
