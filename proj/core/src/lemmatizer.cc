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

#include "keyxtract/lemmatizer.h"

#include "keyxtract/error.h"
#include "keyxtract/text.h"
#include "keyxtract/tokenizer.h"

namespace keyxtract {
namespace {

constexpr int kMaxLemmaRounds = 4;

bool IsVowelAt(std::string_view s, size_t i) {
  switch (s[i]) {
    case 'a':
    case 'e':
    case 'i':
    case 'o':
    case 'u':
      return true;
    case 'y':
      return i > 0 && !IsVowelAt(s, i - 1);
    default:
      return false;
  }
}

bool HasVowel(std::string_view s) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (IsVowelAt(s, i) || s[i] == 'y') return true;
  }
  return false;
}

// consonant-vowel-consonant ending where the last consonant is not w, x, y.
bool EndsCvc(std::string_view s) {
  const size_t n = s.size();
  if (n < 3) return false;
  const char last = s[n - 1];
  if (last == 'w' || last == 'x' || last == 'y') return false;
  return !IsVowelAt(s, n - 3) && IsVowelAt(s, n - 2) && !IsVowelAt(s, n - 1);
}

// Undoes consonant doubling or restores a silent 'e' after "-ed"/"-ing"
// has been stripped.
std::string RepairStem(std::string stem) {
  const size_t n = stem.size();
  if (n >= 3 && stem[n - 1] == stem[n - 2] &&
      std::string_view("bdgmnprt").find(stem[n - 1]) != std::string_view::npos) {
    stem.pop_back();
    return stem;
  }
  // British "-elled": cancelled, travelled.
  if (text::EndsWith(stem, "ell") && Measure(stem) >= 2) {
    stem.pop_back();
    return stem;
  }
  auto consonant_at = [&](size_t i) { return i < n && !IsVowelAt(stem, i); };
  const bool add_e =
      (text::EndsWith(stem, "at") && n >= 3 && consonant_at(n - 3)) ||
      text::EndsWith(stem, "bl") || text::EndsWith(stem, "iz") ||
      (text::EndsWith(stem, "ib") && n >= 5) || stem.back() == 'v' ||
      stem.back() == 'c' ||
      (stem.back() == 'g' && n >= 2 &&
       std::string_view("rdl").find(stem[n - 2]) != std::string_view::npos) ||
      (text::EndsWith(stem, "ang") && n >= 5) ||
      (stem.back() == 's' && n >= 3 && IsVowelAt(stem, n - 2)) ||
      ((text::EndsWith(stem, "ir") || text::EndsWith(stem, "ur") ||
        text::EndsWith(stem, "ar")) &&
       n >= 3 && consonant_at(n - 3)) ||
      text::EndsWith(stem, "let") ||
      (text::EndsWith(stem, "id") && n >= 3 && consonant_at(n - 3) &&
       Measure(stem) >= 2) ||
      text::EndsWith(stem, "lud") || (Measure(stem) == 1 && EndsCvc(stem));
  if (add_e) stem.push_back('e');
  return stem;
}

std::optional<std::string> ApplySuffix(const SuffixTransform& rule,
                                       std::string_view word) {
  if (!text::EndsWith(word, rule.suffix) || word.size() <= rule.suffix.size()) {
    return std::nullopt;
  }
  const std::string_view stem = word.substr(0, word.size() - rule.suffix.size());
  if (rule.suffix == "s" && rule.replacement.empty()) {
    if (word.size() < 3 || text::EndsWith(word, "ss") ||
        text::EndsWith(word, "us") || text::EndsWith(word, "is")) {
      return std::nullopt;
    }
  }
  if (rule.repair_stem) {
    if (rule.suffix == "ed" && text::EndsWith(word, "eed")) {
      // agreed -> agree, but need / feed / proceed stay.
      const std::string_view head = word.substr(0, word.size() - 3);
      if (text::EndsWith(word, "ceed") || Measure(head) == 0) {
        return std::string(word);
      }
      return std::string(word.substr(0, word.size() - 1));
    }
    if (stem.size() < 2 || !HasVowel(stem)) return std::nullopt;
    return RepairStem(std::string(stem));
  }
  if ((rule.suffix == "ies" || rule.suffix == "ied") && stem.size() < 2) {
    return std::string(stem) + "ie";
  }
  return std::string(stem) + rule.replacement;
}

std::string LemmaOnce(const std::string& word, PennTag tag,
                      const LemmaRules& rules) {
  if (IsClitic(word)) {
    const std::string clitic = text::NormalizeApostrophes(word);
    if (clitic == "'s" && tag == PennTag::kPOS) return word;
    if (const auto* rule = rules.FindContraction(clitic)) {
      return rule->expansion;
    }
    return word;
  }
  const auto [lo, hi] = rules.irregulars().equal_range(word);
  for (auto it = lo; it != hi; ++it) {
    if (it->second.tag_prefix.empty() ||
        TagHasPrefix(tag, it->second.tag_prefix)) {
      return it->second.lemma;
    }
  }
  for (const SuffixTransform& rule : rules.suffixes()) {
    if (!TagHasPrefix(tag, rule.tag_prefix)) continue;
    if (auto out = ApplySuffix(rule, word)) return *out;
  }
  return word;
}

}  // namespace

int Measure(std::string_view stem) {
  int m = 0;
  bool prev_vowel = false;
  for (size_t i = 0; i < stem.size(); ++i) {
    const bool vowel = IsVowelAt(stem, i);
    if (!vowel && prev_vowel) ++m;
    prev_vowel = vowel;
  }
  return m;
}

LemmaRules LemmaRules::Parse(std::span<const std::string> lines) {
  enum class Section { kNone, kIrregular, kSuffix, kContraction };
  LemmaRules rules;
  Section section = Section::kNone;
  int line_no = 0;
  for (const std::string& raw : lines) {
    ++line_no;
    const std::string_view line = text::Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line == "[irregular]") {
      section = Section::kIrregular;
      continue;
    }
    if (line == "[suffix]") {
      section = Section::kSuffix;
      continue;
    }
    if (line == "[contraction]") {
      section = Section::kContraction;
      continue;
    }
    if (line.front() == '[') {
      throw Error(ErrorCode::kMalformedLine,
                  "unknown section " + std::string(line), line_no);
    }
    const auto cols = text::Split(line, '\t');
    if (cols.size() < 2 || cols[0].empty() || cols[1].empty()) {
      throw Error(ErrorCode::kMalformedLine, "expected from<TAB>to[<TAB>TAG]",
                  line_no);
    }
    const std::string from = text::FoldCase(text::NormalizeApostrophes(cols[0]));
    const std::string to = text::FoldCase(cols[1]);
    const std::string tag = cols.size() > 2 ? std::string(cols[2]) : "";
    switch (section) {
      case Section::kNone:
        throw Error(ErrorCode::kMalformedLine, "mapping outside a section",
                    line_no);
      case Section::kIrregular:
        rules.AddIrregular(from, {to, tag});
        break;
      case Section::kSuffix: {
        SuffixTransform rule;
        rule.suffix = from;
        rule.repair_stem = to == "+";
        rule.replacement = (to == "-" || to == "+") ? "" : to;
        rule.tag_prefix = tag;
        rules.AddSuffix(std::move(rule));
        break;
      }
      case Section::kContraction: {
        const auto parsed = ParseTag(tag);
        if (!parsed) {
          throw Error(ErrorCode::kMalformedLine,
                      "contraction needs a valid tag, got '" + tag + "'",
                      line_no);
        }
        rules.AddContraction(from, {to, *parsed});
        break;
      }
    }
  }
  rules.Validate();
  return rules;
}

LemmaRules LemmaRules::Load(const std::filesystem::path& path) {
  const auto lines = text::ReadLines(path);
  return Parse(lines);
}

void LemmaRules::AddIrregular(std::string word, IrregularRule rule) {
  irregulars_.emplace(std::move(word), std::move(rule));
}

void LemmaRules::AddContraction(std::string clitic, ContractionRule rule) {
  contractions_[text::NormalizeApostrophes(clitic)] = std::move(rule);
}

const ContractionRule* LemmaRules::FindContraction(
    std::string_view clitic) const {
  auto it = contractions_.find(text::NormalizeApostrophes(clitic));
  return it == contractions_.end() ? nullptr : &it->second;
}

void LemmaRules::Validate() const {
  for (std::string_view clitic : ContractionClitics()) {
    if (FindContraction(clitic) == nullptr) {
      throw Error(ErrorCode::kInvalidArgument,
                  "no contraction rule for '" + std::string(clitic) + "'");
    }
  }
}

std::string Lemma(std::string_view word, PennTag tag, const LemmaRules& rules) {
  std::string current = text::FoldCase(word);
  if (current.empty()) return current;
  for (int round = 0; round < kMaxLemmaRounds; ++round) {
    std::string next = LemmaOnce(current, tag, rules);
    if (next.empty() || next == current) break;
    current = std::move(next);
  }
  return current;
}

void AssignLemmas(TaggedTweet& tweet, const LemmaRules& rules) {
  for (auto& t : tweet.tokens) t.lemma = Lemma(t.token.norm, t.tag, rules);
}

std::vector<TaggedToken> ExpandContraction(const TaggedToken& token,
                                           const LemmaRules& rules,
                                           const TaggedToken* next) {
  const std::string norm = text::NormalizeApostrophes(token.token.norm);
  if (IsClitic(norm)) {
    if (norm == "'s" && token.tag == PennTag::kPOS) return {};
    const ContractionRule* rule = rules.FindContraction(norm);
    if (rule == nullptr) return {token};
    std::string expansion = rule->expansion;
    PennTag tag = rule->tag;
    if (norm == "'d" && next != nullptr && next->tag == PennTag::kVBN) {
      expansion = "had";
      tag = PennTag::kVBD;
    }
    TaggedToken out = token;
    out.token.surface = expansion;
    out.token.norm = expansion;
    out.tag = tag;
    out.lemma = Lemma(expansion, tag, rules);
    return {out};
  }

  const size_t clitic_len = CliticSuffixLength(token.token.surface);
  if (clitic_len == 0) return {token};

  const std::string& surface = token.token.surface;
  TaggedToken base = token;
  base.token = Token::Make(surface.substr(0, surface.size() - clitic_len),
                           token.token.position);
  base.lemma = Lemma(base.token.norm, base.tag, rules);

  TaggedToken clitic = token;
  clitic.token = Token::Make(surface.substr(surface.size() - clitic_len),
                             token.token.position);
  // Without a tagger decision for the clitic, "'s" after a noun reads as a
  // possessive.
  const bool possessive =
      IsClitic(clitic.token.norm) &&
      text::NormalizeApostrophes(clitic.token.norm) == "'s" && IsNoun(base.tag);
  clitic.tag = possessive ? PennTag::kPOS : PennTag::kSYM;
  std::vector<TaggedToken> out = {base};
  for (auto& t : ExpandContraction(clitic, rules, next)) {
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace keyxtract
