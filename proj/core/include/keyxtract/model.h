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

// Value types shared by every pipeline stage and evaluator.

#ifndef KEYXTRACT_MODEL_H_
#define KEYXTRACT_MODEL_H_

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace keyxtract {

// Penn Treebank tags plus the Twitter extensions USR (username), HT
// (hashtag), URL and RT (retweet marker). SYM is the catch-all for symbols
// and punctuation.
enum class PennTag : std::uint8_t {
  kCC,
  kCD,
  kDT,
  kEX,
  kFW,
  kIN,
  kJJ,
  kJJR,
  kJJS,
  kLS,
  kMD,
  kNN,
  kNNS,
  kNNP,
  kNNPS,
  kPDT,
  kPOS,
  kPRP,
  kPRPS,  // PRP$
  kRB,
  kRBR,
  kRBS,
  kRP,
  kTO,
  kUH,
  kVB,
  kVBD,
  kVBG,
  kVBN,
  kVBP,
  kVBZ,
  kWDT,
  kWP,
  kWPS,  // WP$
  kWRB,
  kUSR,
  kHT,
  kURL,
  kRT,
  kSYM,
};

inline constexpr int kPennTagCount = static_cast<int>(PennTag::kSYM) + 1;

std::span<const PennTag> AllPennTags();

std::string_view TagCode(PennTag tag);

// Exact code lookup ("PRP$", "VBD", ...). Penn punctuation tags (".", ",",
// ":", "``", "''", "-LRB-", "-RRB-", "$", "#") parse as SYM.
std::optional<PennTag> ParseTag(std::string_view code);

enum class TagCategory { kNoun, kVerb, kAdverb, kOther };

std::string_view CategoryName(TagCategory category);

TagCategory CategoryOf(PennTag tag);
inline bool IsNoun(PennTag tag) { return CategoryOf(tag) == TagCategory::kNoun; }
inline bool IsVerb(PennTag tag) { return CategoryOf(tag) == TagCategory::kVerb; }
inline bool IsAdverb(PennTag tag) {
  return CategoryOf(tag) == TagCategory::kAdverb;
}

// True when the tag code starts with `prefix` ("VB" matches every verb tag).
bool TagHasPrefix(PennTag tag, std::string_view prefix);

// The seven entity classes plus kNone.
enum class NerLabel : std::uint8_t {
  kNone,
  kLocation,
  kPerson,
  kOrganization,
  kMoney,
  kPercent,
  kDate,
  kTime,
};

std::string_view NerName(NerLabel label);
std::optional<NerLabel> ParseNer(std::string_view name);

struct Token {
  std::string surface;
  std::string norm;  // case-folded surface
  int position = 0;  // 0-based index in the tweet

  static Token Make(std::string surface, int position);

  friend bool operator==(const Token&, const Token&) = default;
};

struct TaggedToken {
  Token token;
  PennTag tag = PennTag::kNN;
  std::optional<std::string> lemma;
  NerLabel ner = NerLabel::kNone;

  // Lemma when present, otherwise the norm form.
  const std::string& key() const { return lemma ? *lemma : token.norm; }

  friend bool operator==(const TaggedToken&, const TaggedToken&) = default;
};

struct TaggedTweet {
  std::vector<TaggedToken> tokens;

  friend bool operator==(const TaggedTweet&, const TaggedTweet&) = default;
};

enum class KeywordSource : std::uint8_t {
  kSelected,
  kNegationReinserted,
  kDskIncluded,
};

std::string_view SourceName(KeywordSource source);

struct Keyword {
  std::string text;
  PennTag tag = PennTag::kNN;
  KeywordSource source = KeywordSource::kSelected;

  friend bool operator==(const Keyword&, const Keyword&) = default;
};

enum class Mode : std::uint8_t { kStage1, kStage2 };

std::string_view ModeName(Mode mode);  // "stage1" / "stage2"
std::optional<Mode> ParseMode(std::string_view name);

struct KeywordList {
  std::string tweet;
  std::vector<Keyword> keywords;
  Mode mode = Mode::kStage2;

  std::vector<std::string> Texts() const;
};

enum class CorpusKind : std::uint8_t { kDsk, kReject };

using TermSet = std::set<std::string, std::less<>>;

std::string_view CorpusKindName(CorpusKind kind);

// A named set of lowercase terms. Terms may be space-joined phrases.
class Corpus {
 public:
  Corpus() = default;
  Corpus(std::string name, CorpusKind kind, TermSet terms);

  const std::string& name() const { return name_; }
  CorpusKind kind() const { return kind_; }
  const TermSet& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  // Exact membership; callers pass case-folded words.
  bool Contains(std::string_view word) const;

  // Length in tokens of the longest phrase (1 for single-word corpora).
  int max_phrase_tokens() const { return max_phrase_tokens_; }

 private:
  std::string name_;
  CorpusKind kind_ = CorpusKind::kDsk;
  TermSet terms_;
  int max_phrase_tokens_ = 0;
};

}  // namespace keyxtract

#endif  // KEYXTRACT_MODEL_H_
