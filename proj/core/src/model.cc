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

#include "keyxtract/model.h"

#include <algorithm>
#include <array>

#include "keyxtract/text.h"

namespace keyxtract {
namespace {

constexpr std::array<std::string_view, kPennTagCount> kTagCodes = {
    "CC",  "CD",  "DT",  "EX",   "FW",  "IN",  "JJ",  "JJR", "JJS", "LS",
    "MD",  "NN",  "NNS", "NNP",  "NNPS", "PDT", "POS", "PRP", "PRP$", "RB",
    "RBR", "RBS", "RP",  "TO",   "UH",  "VB",  "VBD", "VBG", "VBN", "VBP",
    "VBZ", "WDT", "WP",  "WP$",  "WRB", "USR", "HT",  "URL", "RT",  "SYM",
};

constexpr std::array<std::string_view, 11> kPunctuationCodes = {
    ".", ",", ":", "``", "''", "-LRB-", "-RRB-", "$", "#", "(", ")",
};

const std::array<PennTag, kPennTagCount>& TagTable() {
  static const auto table = [] {
    std::array<PennTag, kPennTagCount> t{};
    for (int i = 0; i < kPennTagCount; ++i) t[i] = static_cast<PennTag>(i);
    return t;
  }();
  return table;
}

}  // namespace

std::span<const PennTag> AllPennTags() { return TagTable(); }

std::string_view TagCode(PennTag tag) {
  return kTagCodes[static_cast<size_t>(tag)];
}

std::optional<PennTag> ParseTag(std::string_view code) {
  for (int i = 0; i < kPennTagCount; ++i) {
    if (kTagCodes[i] == code) return static_cast<PennTag>(i);
  }
  if (std::find(kPunctuationCodes.begin(), kPunctuationCodes.end(), code) !=
      kPunctuationCodes.end()) {
    return PennTag::kSYM;
  }
  return std::nullopt;
}

std::string_view CategoryName(TagCategory category) {
  switch (category) {
    case TagCategory::kNoun: return "NOUN";
    case TagCategory::kVerb: return "VERB";
    case TagCategory::kAdverb: return "ADVERB";
    case TagCategory::kOther: return "OTHER";
  }
  return "OTHER";
}

TagCategory CategoryOf(PennTag tag) {
  const std::string_view code = TagCode(tag);
  if (text::StartsWith(code, "NN")) return TagCategory::kNoun;
  if (text::StartsWith(code, "VB")) return TagCategory::kVerb;
  if (text::StartsWith(code, "RB")) return TagCategory::kAdverb;
  return TagCategory::kOther;
}

bool TagHasPrefix(PennTag tag, std::string_view prefix) {
  return text::StartsWith(TagCode(tag), prefix);
}

std::string_view NerName(NerLabel label) {
  switch (label) {
    case NerLabel::kNone: return "NONE";
    case NerLabel::kLocation: return "LOCATION";
    case NerLabel::kPerson: return "PERSON";
    case NerLabel::kOrganization: return "ORGANIZATION";
    case NerLabel::kMoney: return "MONEY";
    case NerLabel::kPercent: return "PERCENT";
    case NerLabel::kDate: return "DATE";
    case NerLabel::kTime: return "TIME";
  }
  return "NONE";
}

std::optional<NerLabel> ParseNer(std::string_view name) {
  for (auto label : {NerLabel::kNone, NerLabel::kLocation, NerLabel::kPerson,
                     NerLabel::kOrganization, NerLabel::kMoney,
                     NerLabel::kPercent, NerLabel::kDate, NerLabel::kTime}) {
    if (NerName(label) == name) return label;
  }
  return std::nullopt;
}

Token Token::Make(std::string surface, int position) {
  Token t;
  t.norm = text::FoldCase(surface);
  t.surface = std::move(surface);
  t.position = position;
  return t;
}

std::string_view SourceName(KeywordSource source) {
  switch (source) {
    case KeywordSource::kSelected: return "selected";
    case KeywordSource::kNegationReinserted: return "negation_reinserted";
    case KeywordSource::kDskIncluded: return "dsk_included";
  }
  return "selected";
}

std::string_view ModeName(Mode mode) {
  return mode == Mode::kStage1 ? "stage1" : "stage2";
}

std::optional<Mode> ParseMode(std::string_view name) {
  if (name == "stage1") return Mode::kStage1;
  if (name == "stage2") return Mode::kStage2;
  return std::nullopt;
}

std::vector<std::string> KeywordList::Texts() const {
  std::vector<std::string> out;
  out.reserve(keywords.size());
  for (const auto& k : keywords) out.push_back(k.text);
  return out;
}

std::string_view CorpusKindName(CorpusKind kind) {
  return kind == CorpusKind::kDsk ? "dsk" : "reject";
}

Corpus::Corpus(std::string name, CorpusKind kind, TermSet terms)
    : name_(std::move(name)), kind_(kind), terms_(std::move(terms)) {
  for (const auto& term : terms_) {
    const int n = static_cast<int>(text::SplitWhitespace(term).size());
    max_phrase_tokens_ = std::max(max_phrase_tokens_, n);
  }
}

bool Corpus::Contains(std::string_view word) const {
  return terms_.find(word) != terms_.end();
}

}  // namespace keyxtract
