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

#ifndef KEYXTRACT_LEMMATIZER_H_
#define KEYXTRACT_LEMMATIZER_H_

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "keyxtract/model.h"

namespace keyxtract {

struct IrregularRule {
  std::string lemma;
  std::string tag_prefix;  // empty: any tag
};

struct SuffixTransform {
  std::string suffix;
  std::string replacement;
  bool repair_stem = false;  // undoubling and silent-e restoration
  std::string tag_prefix;
};

struct ContractionRule {
  std::string expansion;
  PennTag tag = PennTag::kRB;
};

// Inflection and contraction tables. Keys and values are lowercase; clitic
// keys use the ASCII apostrophe.
class LemmaRules {
 public:
  // Reads the rules format: sections [irregular], [suffix], [contraction],
  // one `from<TAB>to[<TAB>TAG]` mapping per line, '#' comments.
  static LemmaRules Parse(std::span<const std::string> lines);
  static LemmaRules Load(const std::filesystem::path& path);

  void AddIrregular(std::string word, IrregularRule rule);
  void AddSuffix(SuffixTransform rule) { suffixes_.push_back(std::move(rule)); }
  void AddContraction(std::string clitic, ContractionRule rule);

  const std::multimap<std::string, IrregularRule, std::less<>>& irregulars()
      const {
    return irregulars_;
  }
  std::span<const SuffixTransform> suffixes() const { return suffixes_; }
  const ContractionRule* FindContraction(std::string_view clitic) const;

  // Throws Error(kInvalidArgument) when a clitic the tokenizer can emit has
  // no contraction mapping.
  void Validate() const;

 private:
  std::multimap<std::string, IrregularRule, std::less<>> irregulars_;
  std::vector<SuffixTransform> suffixes_;
  std::map<std::string, ContractionRule, std::less<>> contractions_;
};

// Base form of `word` under `tag`. Irregular table first, then the first
// tag-matching suffix transform, else identity; the result is iterated to a
// fixed point so Lemma(Lemma(w)) == Lemma(w). Never empty.
std::string Lemma(std::string_view word, PennTag tag, const LemmaRules& rules);

// Porter's measure: the number of vowel-consonant sequences in `stem`.
int Measure(std::string_view stem);

// Fills TaggedToken::lemma for every token.
void AssignLemmas(TaggedTweet& tweet, const LemmaRules& rules);

// Expands a clitic token to its full form ("n't" -> "not"/RB). A possessive
// "'s" (POS) expands to nothing. An unsplit contraction ("hasn't") yields the
// base token followed by the expansion. "'d" reads as "had" when `next` is a
// past participle, otherwise "would". Other tokens pass through unchanged.
std::vector<TaggedToken> ExpandContraction(const TaggedToken& token,
                                           const LemmaRules& rules,
                                           const TaggedToken* next = nullptr);

}  // namespace keyxtract

#endif  // KEYXTRACT_LEMMATIZER_H_
