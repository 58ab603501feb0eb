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

#include "keyxtract/tagger.h"

#include <algorithm>
#include <optional>

#include "keyxtract/error.h"
#include "keyxtract/text.h"

namespace keyxtract {
namespace {

bool In(PennTag tag, std::initializer_list<PennTag> set) {
  return std::find(set.begin(), set.end(), tag) != set.end();
}

// Previous tags after which a noun reading is preferred.
bool NounContext(PennTag prev) {
  return In(prev, {PennTag::kDT, PennTag::kJJ, PennTag::kJJR, PennTag::kJJS,
                   PennTag::kPRPS, PennTag::kPOS, PennTag::kCD, PennTag::kWPS,
                   PennTag::kPDT});
}

// Previous tags after which a verb reading is preferred.
bool VerbContext(PennTag prev) {
  return In(prev, {PennTag::kPRP, PennTag::kMD, PennTag::kTO, PennTag::kWP,
                   PennTag::kWRB, PennTag::kEX, PennTag::kWDT});
}

bool EndsWithPluralS(std::string_view w) {
  return w.size() > 2 && w.back() == 's' && !text::EndsWith(w, "ss") &&
         !text::EndsWith(w, "us") && !text::EndsWith(w, "is");
}

PennTag ContextFallback(std::string_view norm, const PennTag* prev,
                        PennTag default_tag) {
  if (prev == nullptr) return default_tag;
  if (NounContext(*prev)) {
    return EndsWithPluralS(norm) ? PennTag::kNNS : PennTag::kNN;
  }
  if (In(*prev, {PennTag::kMD, PennTag::kTO})) return PennTag::kVB;
  if (In(*prev, {PennTag::kPRP, PennTag::kWP, PennTag::kEX}) ||
      IsNoun(*prev)) {
    return EndsWithPluralS(norm) ? PennTag::kVBZ : PennTag::kVBP;
  }
  return default_tag;
}

}  // namespace

TagLexicon::TagLexicon() : suffix_rules_(DefaultSuffixRules()) {}

std::vector<SuffixRule> TagLexicon::DefaultSuffixRules() {
  return {
      {"ing", PennTag::kVBG, 2},  {"ed", PennTag::kVBD, 2},
      {"ly", PennTag::kRB, 3},    {"tion", PennTag::kNN, 2},
      {"tions", PennTag::kNNS, 2}, {"sion", PennTag::kNN, 2},
      {"ment", PennTag::kNN, 2},  {"ments", PennTag::kNNS, 2},
      {"ness", PennTag::kNN, 2},  {"ity", PennTag::kNN, 2},
      {"ance", PennTag::kNN, 2},  {"ence", PennTag::kNN, 2},
      {"ship", PennTag::kNN, 2},  {"ism", PennTag::kNN, 2},
      {"able", PennTag::kJJ, 2},  {"ible", PennTag::kJJ, 2},
      {"ous", PennTag::kJJ, 2},   {"ful", PennTag::kJJ, 2},
      {"less", PennTag::kJJ, 2},  {"ive", PennTag::kJJ, 2},
      {"ical", PennTag::kJJ, 2},  {"ic", PennTag::kJJ, 3},
      {"ize", PennTag::kVB, 2},   {"ise", PennTag::kVB, 3},
      {"ify", PennTag::kVB, 2},
  };
}

TagLexicon TagLexicon::Parse(std::span<const std::string> lines,
                             std::vector<std::string>* warnings) {
  TagLexicon lexicon;
  int line_no = 0;
  for (const std::string& raw : lines) {
    ++line_no;
    const std::string_view line = text::Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto cols = text::Split(line, '\t');
    if (cols.size() < 2 || text::Trim(cols[0]).empty()) {
      throw Error(ErrorCode::kMalformedLine, "lexicon entry needs word<TAB>TAG",
                  line_no);
    }
    std::vector<PennTag> tags;
    for (std::string_view code : text::Split(cols[1], ',')) {
      code = text::Trim(code);
      if (code.empty()) continue;
      if (auto tag = ParseTag(code)) {
        tags.push_back(*tag);
      } else {
        tags.push_back(PennTag::kSYM);
        if (warnings != nullptr) {
          warnings->push_back("line " + std::to_string(line_no) +
                              ": unknown tag '" + std::string(code) +
                              "' mapped to SYM");
        }
      }
    }
    if (tags.empty()) {
      throw Error(ErrorCode::kMalformedLine, "lexicon entry has no tags",
                  line_no);
    }
    lexicon.Add(text::FoldCase(text::Trim(cols[0])), std::move(tags));
  }
  return lexicon;
}

TagLexicon TagLexicon::Load(const std::filesystem::path& path,
                            std::vector<std::string>* warnings) {
  const auto lines = text::ReadLines(path);
  return Parse(lines, warnings);
}

void TagLexicon::Add(std::string word, std::vector<PennTag> tags) {
  if (tags.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "lexicon entry without tags");
  }
  entries_[text::NormalizeApostrophes(word)] = std::move(tags);
}

const std::vector<PennTag>* TagLexicon::Lookup(std::string_view norm) const {
  auto it = entries_.find(text::NormalizeApostrophes(norm));
  return it == entries_.end() ? nullptr : &it->second;
}

PennTag TagLexicon::Choose(std::span<const PennTag> tags,
                           const PennTag* previous) {
  if (tags.size() == 1 || previous == nullptr) return tags.front();
  const PennTag prev = *previous;
  auto first = [&](auto pred) -> const PennTag* {
    auto it = std::find_if(tags.begin(), tags.end(), pred);
    return it == tags.end() ? nullptr : &*it;
  };
  if (NounContext(prev)) {
    if (auto t = first([](PennTag t) { return IsNoun(t); })) return *t;
  }
  if (In(prev, {PennTag::kMD, PennTag::kTO})) {
    if (std::find(tags.begin(), tags.end(), PennTag::kVB) != tags.end()) {
      return PennTag::kVB;
    }
  }
  if (VerbContext(prev)) {
    if (auto t = first([](PennTag t) { return IsVerb(t); })) return *t;
  }
  if (IsNoun(prev)) {
    if (std::find(tags.begin(), tags.end(), PennTag::kPOS) != tags.end()) {
      return PennTag::kPOS;
    }
  }
  return tags.front();
}

TaggedTweet Tag(std::span<const Token> tokens, const TagLexicon& lexicon) {
  TaggedTweet out;
  out.tokens.reserve(tokens.size());
  std::optional<PennTag> prev_tag;
  for (const Token& token : tokens) {
    const PennTag* prev = prev_tag ? &*prev_tag : nullptr;
    const std::string& norm = token.norm;
    PennTag tag;
    if (norm.size() > 1 && norm[0] == '@') {
      tag = PennTag::kUSR;
    } else if (norm.size() > 1 && norm[0] == '#') {
      tag = PennTag::kHT;
    } else if (text::IsUrl(norm)) {
      tag = PennTag::kURL;
    } else if (out.tokens.empty() && norm == "rt") {
      tag = PennTag::kRT;
    } else if (const auto* entry = lexicon.Lookup(norm)) {
      tag = TagLexicon::Choose(*entry, prev);
    } else if (text::IsNumber(norm)) {
      tag = PennTag::kCD;
    } else if (text::IsPunctuation(norm)) {
      tag = PennTag::kSYM;
    } else {
      const SuffixRule* match = nullptr;
      for (const SuffixRule& rule : lexicon.suffix_rules()) {
        if (norm.size() >= rule.suffix.size() + rule.min_stem &&
            text::EndsWith(norm, rule.suffix)) {
          match = &rule;
          break;
        }
      }
      tag = match != nullptr
                ? match->tag
                : ContextFallback(norm, prev, lexicon.default_tag());
    }
    TaggedToken tagged;
    tagged.token = token;
    tagged.token.position = static_cast<int>(out.tokens.size());
    tagged.tag = tag;
    out.tokens.push_back(std::move(tagged));
    prev_tag = tag;
  }
  return out;
}

ImportResult ImportTagged(std::string_view input) {
  ImportResult result;
  TaggedTweet current;
  auto flush = [&] {
    if (!current.tokens.empty()) {
      result.tweets.push_back(std::move(current));
      current = TaggedTweet{};
    }
  };
  int line_no = 0;
  for (std::string_view line : text::Split(input, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || text::Trim(line).empty()) {
      flush();
      continue;
    }
    if (line.front() == '#' && line.find('\t') == std::string_view::npos) {
      continue;
    }
    const size_t tab = line.rfind('\t');
    if (tab == std::string_view::npos || tab == 0 ||
        text::Trim(line.substr(tab + 1)).empty()) {
      throw Error(ErrorCode::kMalformedLine, "expected surface<TAB>TAG",
                  line_no);
    }
    const std::string_view surface = line.substr(0, tab);
    const std::string_view code = text::Trim(line.substr(tab + 1));
    TaggedToken token;
    token.token = Token::Make(std::string(surface),
                              static_cast<int>(current.tokens.size()));
    if (auto tag = ParseTag(code)) {
      token.tag = *tag;
    } else {
      token.tag = PennTag::kSYM;
      result.warnings.push_back("line " + std::to_string(line_no) +
                                ": unknown tag '" + std::string(code) +
                                "' mapped to SYM");
    }
    current.tokens.push_back(std::move(token));
  }
  flush();
  return result;
}

ImportResult ImportTaggedFile(const std::filesystem::path& path) {
  const auto lines = text::ReadLines(path);
  std::string joined;
  for (const auto& l : lines) {
    joined += l;
    joined += '\n';
  }
  return ImportTagged(joined);
}

std::string RenderTagged(const TaggedTweet& tweet) {
  std::string out;
  for (const auto& t : tweet.tokens) {
    out += t.token.surface;
    out += '\t';
    out += TagCode(t.tag);
    out += '\n';
  }
  return out;
}

namespace {

size_t CountMatches(const TaggedTweet& predicted, const TaggedTweet& gold) {
  if (predicted.tokens.size() != gold.tokens.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "predicted has " + std::to_string(predicted.tokens.size()) +
                    " tokens, gold has " + std::to_string(gold.tokens.size()));
  }
  size_t matches = 0;
  for (size_t i = 0; i < gold.tokens.size(); ++i) {
    if (predicted.tokens[i].token.surface != gold.tokens[i].token.surface) {
      throw Error(ErrorCode::kSurfaceMismatch,
                  "token " + std::to_string(i) + ": '" +
                      predicted.tokens[i].token.surface + "' vs '" +
                      gold.tokens[i].token.surface + "'");
    }
    if (predicted.tokens[i].tag == gold.tokens[i].tag) ++matches;
  }
  return matches;
}

}  // namespace

double TokenAccuracy(const TaggedTweet& predicted, const TaggedTweet& gold) {
  const size_t matches = CountMatches(predicted, gold);
  if (gold.tokens.empty()) return 1.0;
  return static_cast<double>(matches) / static_cast<double>(gold.tokens.size());
}

double TokenAccuracy(std::span<const TaggedTweet> predicted,
                     std::span<const TaggedTweet> gold) {
  if (predicted.size() != gold.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "predicted has " + std::to_string(predicted.size()) +
                    " tweets, gold has " + std::to_string(gold.size()));
  }
  size_t matches = 0;
  size_t total = 0;
  for (size_t i = 0; i < gold.size(); ++i) {
    matches += CountMatches(predicted[i], gold[i]);
    total += gold[i].tokens.size();
  }
  if (total == 0) return 1.0;
  return static_cast<double>(matches) / static_cast<double>(total);
}

}  // namespace keyxtract
