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

// Gazetteer and pattern based entity labeling. Each token is labeled on its
// own; multi-token entities are not chunked.

#ifndef KEYXTRACT_NER_H_
#define KEYXTRACT_NER_H_

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "keyxtract/model.h"

namespace keyxtract {

// Term lists for the lexical classes: LOCATION, PERSON, ORGANIZATION, DATE
// and TIME. MONEY and PERCENT are pattern-only.
class Gazetteer {
 public:
  // Parses `CLASS<TAB>term` lines; '#' comments and blank lines skipped.
  // Throws kMalformedLine for a bad line or a pattern-only class and
  // kGazetteerConflict when a term is listed under two classes. A repeat
  // within one class appends a warning.
  static Gazetteer Parse(std::span<const std::string> lines,
                         std::vector<std::string>* warnings = nullptr);
  static Gazetteer Load(const std::filesystem::path& path,
                        std::vector<std::string>* warnings = nullptr);

  // Returns false when the term was already present under `label`.
  bool Add(NerLabel label, std::string_view term);

  // kNone when the term is unknown. `term` must be case-folded.
  NerLabel Find(std::string_view term) const;

  std::vector<std::string> Terms(NerLabel label) const;
  size_t size() const { return index_.size(); }

  static bool IsLexicalClass(NerLabel label);

 private:
  std::map<std::string, NerLabel, std::less<>> index_;
};

// Sets TaggedToken::ner on every token. Patterns (percent, money, clock
// times, numeric dates) run first; remaining tokens are looked up in the
// gazetteer by lemma, or by norm when no lemma is set. DATE and TIME terms
// are not applied to verbs and modals ("may", "march" as a verb).
void Classify(TaggedTweet& tweet, const Gazetteer& gazetteer);

inline bool IsTimeIndicator(NerLabel label) {
  return label == NerLabel::kDate || label == NerLabel::kTime;
}

}  // namespace keyxtract

#endif  // KEYXTRACT_NER_H_
