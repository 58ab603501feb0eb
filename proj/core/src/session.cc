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

#include "keyxtract/session.h"

#include <cstdio>
#include <fstream>
#include <random>

#include "json.hpp"
#include "keyxtract/error.h"
#include "keyxtract/text.h"

namespace keyxtract {
namespace {

using json = nlohmann::json;

std::string NewSessionId(std::mt19937_64& rng) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "s%016llx",
                static_cast<unsigned long long>(rng()));
  return buf;
}

}  // namespace

std::string_view SideName(Side side) {
  return side == Side::kLeft ? "left" : "right";
}

std::optional<Side> ParseSide(std::string_view name) {
  if (name == "left") return Side::kLeft;
  if (name == "right") return Side::kRight;
  return std::nullopt;
}

std::string_view StatusName(SessionStatus status) {
  return status == SessionStatus::kOpen ? "open" : "complete";
}

std::string_view OutcomeName(PairOutcome outcome) {
  switch (outcome) {
    case PairOutcome::kIdentical:
      return "identical";
    case PairOutcome::kDetected:
      return "detected";
    case PairOutcome::kUndetected:
      return "undetected";
  }
  return "identical";
}

TuringSession::TuringSession(std::string id, std::string criterion,
                             std::vector<PairInput> pairs, std::uint64_t seed)
    : id_(std::move(id)), criterion_(std::move(criterion)), seed_(seed) {
  if (pairs.empty()) {
    throw Error(ErrorCode::kEmptyInput, "session needs at least one pair");
  }
  std::mt19937_64 rng(seed);
  pairs_.reserve(pairs.size());
  for (auto& p : pairs) {
    SessionPair sp;
    sp.identical = SameKeywordSet(p.human, p.machine);
    sp.machine_on_left = (rng() & 1) != 0;
    sp.input = std::move(p);
    pairs_.push_back(std::move(sp));
  }
}

SessionStatus TuringSession::status() const {
  return judgments_.size() == pairs_.size() ? SessionStatus::kComplete
                                            : SessionStatus::kOpen;
}

std::optional<PairView> TuringSession::Next() const {
  if (status() == SessionStatus::kComplete) return std::nullopt;
  const int index = static_cast<int>(judgments_.size());
  const SessionPair& p = pairs_[index];
  PairView v;
  v.pair_index = index;
  v.pair_count = pair_count();
  v.tweet = p.input.tweet;
  v.left = p.machine_on_left ? p.input.machine : p.input.human;
  v.right = p.machine_on_left ? p.input.human : p.input.machine;
  return v;
}

void TuringSession::Judge(int pair_index, Side chosen) {
  const int current = static_cast<int>(judgments_.size());
  if (status() == SessionStatus::kComplete) {
    throw Error(ErrorCode::kJudgmentConflict, "session is complete");
  }
  if (pair_index != current) {
    throw Error(ErrorCode::kJudgmentConflict,
                "expected a judgment for pair " + std::to_string(current) +
                    ", got " + std::to_string(pair_index));
  }
  judgments_.push_back(chosen);
}

std::vector<PairOutcome> TuringSession::Outcomes() const {
  std::vector<PairOutcome> out;
  out.reserve(judgments_.size());
  for (size_t i = 0; i < judgments_.size(); ++i) {
    const SessionPair& p = pairs_[i];
    if (p.identical) {
      out.push_back(PairOutcome::kIdentical);
      continue;
    }
    const Side machine = p.machine_on_left ? Side::kLeft : Side::kRight;
    out.push_back(judgments_[i] == machine ? PairOutcome::kDetected
                                           : PairOutcome::kUndetected);
  }
  return out;
}

TuringTally TuringSession::Tally() const {
  if (status() != SessionStatus::kComplete) {
    throw Error(ErrorCode::kSessionOpen,
                std::to_string(pair_count() - judgments_.size()) +
                    " pairs still unjudged");
  }
  int x = 0, y = 0, z = 0;
  for (PairOutcome o : Outcomes()) {
    if (o == PairOutcome::kIdentical) {
      ++x;
    } else if (o == PairOutcome::kDetected) {
      ++y;
    } else {
      ++z;
    }
  }
  return TuringTally::From(x, y, z);
}

// Per-session lock; the store lock only guards the map.
struct SessionStore::Entry {
  explicit Entry(TuringSession s) : session(std::move(s)) {}
  mutable std::mutex mu;
  TuringSession session;
};

SessionStore::SessionStore(std::optional<std::filesystem::path> dir)
    : dir_(std::move(dir)) {
  if (dir_) {
    std::error_code ec;
    std::filesystem::create_directories(*dir_, ec);
    if (ec) {
      throw Error(ErrorCode::kIo, "cannot create session directory " +
                                      dir_->string() + ": " + ec.message());
    }
    Load();
  }
}

SessionStore::~SessionStore() = default;

void SessionStore::Load() {
  for (const auto& file : std::filesystem::directory_iterator(*dir_)) {
    if (file.path().extension() != ".jsonl") continue;
    const auto lines = text::ReadLines(file.path());
    std::optional<TuringSession> session;
    int line_no = 0;
    for (const auto& line : lines) {
      ++line_no;
      if (text::Trim(line).empty()) continue;
      try {
        const json rec = json::parse(line);
        const std::string type = rec.at("type");
        if (type == "created") {
          std::vector<PairInput> pairs;
          for (const auto& p : rec.at("pairs")) {
            pairs.push_back({p.at("tweet"), p.at("human"), p.at("machine")});
          }
          session.emplace(rec.at("session_id"), rec.at("criterion"),
                          std::move(pairs), rec.at("seed").get<std::uint64_t>());
        } else if (type == "judgment" && session) {
          const auto side = ParseSide(rec.at("chosen").get<std::string>());
          if (!side) throw Error(ErrorCode::kMalformedLine, "bad side");
          session->Judge(rec.at("pair_index").get<int>(), *side);
        }
      } catch (const json::exception& e) {
        throw Error(ErrorCode::kMalformedLine,
                    file.path().string() + ": " + e.what(), line_no);
      }
    }
    if (session) {
      // Copy the id first: the right operand is evaluated before the key.
      const std::string id = session->id();
      sessions_[id] = std::make_shared<Entry>(std::move(*session));
    }
  }
}

std::string SessionStore::Create(std::string criterion,
                                 std::vector<PairInput> pairs,
                                 std::optional<std::uint64_t> seed) {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  const std::uint64_t used_seed = seed ? *seed : rng();
  std::string id;
  {
    std::lock_guard lock(mu_);
    do {
      id = NewSessionId(rng);
    } while (sessions_.count(id) > 0);
  }
  auto entry = std::make_shared<Entry>(
      TuringSession(id, std::move(criterion), std::move(pairs), used_seed));

  if (dir_) {
    json rec = {{"type", "created"},
                {"session_id", id},
                {"criterion", entry->session.criterion()},
                {"seed", used_seed},
                {"pairs", json::array()}};
    for (const auto& p : entry->session.pairs()) {
      rec["pairs"].push_back({{"tweet", p.input.tweet},
                              {"human", p.input.human},
                              {"machine", p.input.machine}});
    }
    std::ofstream out(*dir_ / (id + ".jsonl"));
    out << rec.dump() << '\n';
    if (!out) throw Error(ErrorCode::kIo, "cannot write session " + id);
  }

  std::lock_guard lock(mu_);
  sessions_[id] = std::move(entry);
  return id;
}

std::shared_ptr<SessionStore::Entry> SessionStore::Find(
    const std::string& id) const {
  std::lock_guard lock(mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) {
    throw Error(ErrorCode::kUnknownSession, "no session '" + id + "'");
  }
  return it->second;
}

std::optional<PairView> SessionStore::Next(const std::string& id) const {
  auto e = Find(id);
  std::lock_guard lock(e->mu);
  return e->session.Next();
}

int SessionStore::Judge(const std::string& id, int pair_index, Side chosen) {
  auto e = Find(id);
  std::lock_guard lock(e->mu);
  e->session.Judge(pair_index, chosen);
  if (dir_) {
    std::ofstream out(*dir_ / (id + ".jsonl"), std::ios::app);
    out << json{{"type", "judgment"},
                {"pair_index", pair_index},
                {"chosen", SideName(chosen)}}
               .dump()
        << '\n';
    if (!out) throw Error(ErrorCode::kIo, "cannot append to session " + id);
  }
  return static_cast<int>(e->session.judgments().size());
}

SessionResult SessionStore::Result(const std::string& id) const {
  auto e = Find(id);
  std::lock_guard lock(e->mu);
  SessionResult r;
  r.tally = e->session.Tally();
  r.outcomes = e->session.Outcomes();
  r.pairs = e->session.pairs();
  r.judgments = e->session.judgments();
  r.criterion = e->session.criterion();
  return r;
}

int SessionStore::PairCount(const std::string& id) const {
  auto e = Find(id);
  std::lock_guard lock(e->mu);
  return e->session.pair_count();
}

SessionStatus SessionStore::Status(const std::string& id) const {
  auto e = Find(id);
  std::lock_guard lock(e->mu);
  return e->session.status();
}

size_t SessionStore::size() const {
  std::lock_guard lock(mu_);
  return sessions_.size();
}

}  // namespace keyxtract
