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

// Deterministic part-of-speech tagging.
//
// The bundled tagger is a lexicon + suffix + one-token-back context tagger.
// Tags for a token are resolved in this order:
//
//   1. Twitter markers: "@x" -> USR, "#x" -> HT, URL-shaped -> URL, a leading
//      "rt" -> RT.
//   2. Lexicon lookup on the norm form. When an entry lists several tags the
//      previous token's tag picks among them (see TagLexicon::Choose).
//   3. Numbers -> CD, punctuation -> SYM.
//   4. The first matching suffix rule.
//   5. Left context: after DT/JJ/PRP$/POS/CD a noun; after PRP/NN/WP/EX a
//      verb whose form follows the suffix; after MD/TO a base verb.
//   6. The lexicon's default tag (NN).
//
// Externally tagged text can be brought in with ImportTagged instead.

#ifndef KEYXTRACT_TAGGER_H_
#define KEYXTRACT_TAGGER_H_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "keyxtract/model.h"

namespace keyxtract {

struct SuffixRule {
  std::string suffix;
  PennTag tag = PennTag::kNN;
  // Minimum number of bytes that must precede the suffix.
  size_t min_stem = 2;
};

class TagLexicon {
 public:
  // Empty lexicon carrying DefaultSuffixRules().
  TagLexicon();

  // Parses `word<TAB>TAG[,TAG...]` lines. '#' lines and blank lines are
  // skipped. Unknown tag codes become SYM and append a warning.
  static TagLexicon Parse(std::span<const std::string> lines,
                          std::vector<std::string>* warnings = nullptr);
  static TagLexicon Load(const std::filesystem::path& path,
                         std::vector<std::string>* warnings = nullptr);

  static std::vector<SuffixRule> DefaultSuffixRules();

  // Replaces any existing entry. `tags` must be nonempty.
  void Add(std::string word, std::vector<PennTag> tags);

  const std::vector<PennTag>* Lookup(std::string_view norm) const;

  // Picks one of `tags` given the previous token's tag (nullptr at the start
  // of the tweet).
  static PennTag Choose(std::span<const PennTag> tags, const PennTag* previous);

  std::span<const SuffixRule> suffix_rules() const { return suffix_rules_; }
  void set_suffix_rules(std::vector<SuffixRule> rules) {
    suffix_rules_ = std::move(rules);
  }

  PennTag default_tag() const { return default_tag_; }
  void set_default_tag(PennTag tag) { default_tag_ = tag; }

  size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, std::vector<PennTag>> entries_;
  std::vector<SuffixRule> suffix_rules_;
  PennTag default_tag_ = PennTag::kNN;
};

TaggedTweet Tag(std::span<const Token> tokens, const TagLexicon& lexicon);

struct ImportResult {
  std::vector<TaggedTweet> tweets;
  std::vector<std::string> warnings;
};

// Reads the tagged-text format: one `surface<TAB>TAG` per line, a blank line
// ends a tweet, '#' lines are comments. Unknown tags map to SYM with a
// warning. Throws Error(kMalformedLine) for a line without a tag column.
ImportResult ImportTagged(std::string_view text);
ImportResult ImportTaggedFile(const std::filesystem::path& path);

// Inverse of ImportTagged for one tweet (no trailing blank line).
std::string RenderTagged(const TaggedTweet& tweet);

// Fraction of positions whose tags agree. 1.0 for empty input. Throws
// Error(kLengthMismatch) when token counts differ and
// Error(kSurfaceMismatch) when surfaces disagree.
double TokenAccuracy(const TaggedTweet& predicted, const TaggedTweet& gold);

// Corpus-level accuracy: total matches over total tokens.
double TokenAccuracy(std::span<const TaggedTweet> predicted,
                     std::span<const TaggedTweet> gold);

}  // namespace keyxtract

#endif  // KEYXTRACT_TAGGER_H_
