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

// Turing-test supervisor sessions: blind presentation of human/machine
// keyword pairs, one judgment per pair, tally on completion.

#ifndef KEYXTRACT_SESSION_H_
#define KEYXTRACT_SESSION_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "keyxtract/eval.h"

namespace keyxtract {

enum class Side : std::uint8_t { kLeft, kRight };
std::string_view SideName(Side side);  // "left" / "right"
std::optional<Side> ParseSide(std::string_view name);

enum class SessionStatus : std::uint8_t { kOpen, kComplete };
std::string_view StatusName(SessionStatus status);  // "open" / "complete"

enum class PairOutcome : std::uint8_t { kIdentical, kDetected, kUndetected };
std::string_view OutcomeName(PairOutcome outcome);

struct PairInput {
  std::string tweet;
  std::vector<std::string> human;
  std::vector<std::string> machine;
};

struct SessionPair {
  PairInput input;
  bool machine_on_left = false;
  bool identical = false;
};

// What a supervisor sees for one pair. Carries no provenance.
struct PairView {
  int pair_index = 0;
  int pair_count = 0;
  std::string tweet;
  std::vector<std::string> left;
  std::vector<std::string> right;
};

class TuringSession {
 public:
  // Sides are drawn from mt19937_64(seed), one bit per pair. Throws
  // Error(kEmptyInput) for an empty dataset.
  TuringSession(std::string id, std::string criterion,
                std::vector<PairInput> pairs, std::uint64_t seed);

  const std::string& id() const { return id_; }
  const std::string& criterion() const { return criterion_; }
  std::uint64_t seed() const { return seed_; }
  const std::vector<SessionPair>& pairs() const { return pairs_; }
  const std::vector<Side>& judgments() const { return judgments_; }
  int pair_count() const { return static_cast<int>(pairs_.size()); }
  SessionStatus status() const;

  // The current pair, or nullopt once complete.
  std::optional<PairView> Next() const;

  // Records the choice for the current pair. Throws Error(kJudgmentConflict)
  // when `pair_index` is not the current pair: already judged, ahead of the
  // current one, or the session is complete.
  void Judge(int pair_index, Side chosen);

  // Throws Error(kSessionOpen) while pairs remain unjudged.
  TuringTally Tally() const;
  // Per-pair outcomes; only meaningful for judged pairs.
  std::vector<PairOutcome> Outcomes() const;

 private:
  std::string id_;
  std::string criterion_;
  std::uint64_t seed_;
  std::vector<SessionPair> pairs_;
  std::vector<Side> judgments_;
};

struct SessionResult {
  TuringTally tally;
  std::vector<PairOutcome> outcomes;
  std::vector<SessionPair> pairs;
  std::vector<Side> judgments;
  std::string criterion;
};

// Thread-safe registry. With a directory, every session is mirrored to an
// append-only `<id>.jsonl` file and reloaded on construction.
class SessionStore {
 public:
  explicit SessionStore(std::optional<std::filesystem::path> dir = {});
  ~SessionStore();
  SessionStore(const SessionStore&) = delete;
  SessionStore& operator=(const SessionStore&) = delete;

  // Returns the new session id. Without a seed one is drawn at random.
  std::string Create(std::string criterion, std::vector<PairInput> pairs,
                     std::optional<std::uint64_t> seed = {});

  // All of the following throw Error(kUnknownSession) for an unknown id.
  std::optional<PairView> Next(const std::string& id) const;
  // Returns the number of judged pairs after recording.
  int Judge(const std::string& id, int pair_index, Side chosen);
  SessionResult Result(const std::string& id) const;
  int PairCount(const std::string& id) const;
  SessionStatus Status(const std::string& id) const;

  size_t size() const;

 private:
  struct Entry;
  std::shared_ptr<Entry> Find(const std::string& id) const;
  void Load();

  std::optional<std::filesystem::path> dir_;
  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
};

}  // namespace keyxtract

#endif  // KEYXTRACT_SESSION_H_
