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

#ifndef KEYXTRACT_TOKENIZER_H_
#define KEYXTRACT_TOKENIZER_H_

#include <string_view>
#include <vector>

#include "keyxtract/model.h"

namespace keyxtract {

struct TokenizerConfig {
  bool split_contractions = true;
  // When false, Token::norm keeps the surface casing.
  bool lowercase_norm = true;
};

// Clitics split off by the tokenizer, in ASCII-apostrophe form.
std::span<const std::string_view> ContractionClitics();

// True when `word` (any apostrophe style, any case) is exactly a clitic.
bool IsClitic(std::string_view word);

// Byte length of a clitic that `word` ends with, provided a nonempty base
// remains ("hasn't" -> 3, "it's" -> 2); 0 otherwise.
size_t CliticSuffixLength(std::string_view word);

// Twitter-aware tokenizer.
//
//   * @mentions, #hashtags and URLs stay whole; trailing punctuation is split
//     off them ("@dialoglk!" -> "@dialoglk", "!").
//   * Penn-style contraction splitting: "hasn't" -> "has" "n't",
//     "I've" -> "I" "'ve". Both ASCII and typographic apostrophes are
//     recognised. Malformed forms such as "Whats" are left alone.
//   * Runs of one punctuation character form one token ("...", "!!").
//   * Digits joined by '.', ',' or ':' stay together ("3.5", "10:30").
class Tokenizer {
 public:
  Tokenizer() = default;
  explicit Tokenizer(TokenizerConfig config) : config_(config) {}

  const TokenizerConfig& config() const { return config_; }

  std::vector<Token> Tokenize(std::string_view tweet) const;

 private:
  void TokenizeChunk(std::string_view chunk,
                     std::vector<std::string>* out) const;
  void EmitWord(std::string_view word, std::vector<std::string>* out) const;

  TokenizerConfig config_;
};

}  // namespace keyxtract

#endif  // KEYXTRACT_TOKENIZER_H_
